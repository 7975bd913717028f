#ifndef PAFORGE_PARALLEL_HPP
#define PAFORGE_PARALLEL_HPP

namespace paforge {

/// Worker count for an OpenMP region: `requested` when positive, otherwise
/// PA_FORGE_THREADS when set, otherwise the OpenMP default.
int resolve_threads(int requested);

}  // namespace paforge

#endif  // PAFORGE_PARALLEL_HPP
