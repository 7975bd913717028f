#include <functional>
#include <string>

#include "paforge/errors.hpp"
#include "paforge/field.hpp"
#include "paforge/groups.hpp"

namespace paforge {

namespace {

using PointMap = std::function<std::uint32_t(std::uint32_t)>;

Permutation tabulate(std::size_t n, const PointMap& map) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t x = 0; x < n; ++x) images[x] = map(x);
  return Permutation(std::move(images));
}

Field field_for(std::uint32_t q) {
  if (q < 2) throw UsageError("group needs a field order q >= 2");
  return Field::of_order(q);
}

PermGroup make_agl1(const GroupParams& params) {
  const Field field = field_for(params.q);
  const FieldElem g = field.primitive();
  std::vector<Permutation> gens;
  gens.push_back(tabulate(params.q, [&](std::uint32_t x) { return field.add({x}, field.one()).value; }));
  if (params.q > 2) {
    gens.push_back(tabulate(params.q, [&](std::uint32_t x) { return field.mul(g, {x}).value; }));
  }
  return PermGroup(params.q, std::move(gens), "agl1(" + std::to_string(params.q) + ")");
}

// Points 0..q-1 are field elements, q is infinity.
PermGroup make_pgl2(const GroupParams& params) {
  const Field field = field_for(params.q);
  const std::uint32_t q = params.q;
  const FieldElem g = field.primitive();
  std::vector<Permutation> gens;
  gens.push_back(tabulate(q + 1, [&](std::uint32_t x) {
    return x == q ? q : field.add({x}, field.one()).value;
  }));
  if (q > 2) {
    gens.push_back(tabulate(q + 1, [&](std::uint32_t x) { return x == q ? q : field.mul(g, {x}).value; }));
  }
  gens.push_back(tabulate(q + 1, [&](std::uint32_t x) {
    if (x == q) return 0u;
    if (x == 0) return q;
    return field.inv({x}).value;
  }));
  return PermGroup(q + 1, std::move(gens), "pgl2(" + std::to_string(q) + ")");
}

// Vectors of F_q^d encoded base q, coordinate 0 least significant.
PermGroup make_agl(const GroupParams& params) {
  const unsigned d = params.d;
  if (d < 1 || d > 3) throw UsageError("agl needs 1 <= d <= 3");
  if (params.q > 5) throw UsageError("agl needs q <= 5");
  const Field field = field_for(params.q);
  const std::uint32_t q = params.q;
  std::size_t n = 1;
  for (unsigned i = 0; i < d; ++i) n *= q;

  auto decode = [&](std::uint32_t x) {
    std::vector<FieldElem> v(d);
    for (unsigned i = 0; i < d; ++i, x /= q) v[i] = {x % q};
    return v;
  };
  auto encode = [&](const std::vector<FieldElem>& v) {
    std::uint32_t x = 0;
    for (unsigned i = d; i-- > 0;) x = x * q + v[i].value;
    return x;
  };

  std::vector<Permutation> gens;
  gens.push_back(tabulate(n, [&](std::uint32_t x) {
    auto v = decode(x);
    v[0] = field.add(v[0], field.one());
    return encode(v);
  }));
  if (q > 2) {
    gens.push_back(tabulate(n, [&](std::uint32_t x) {
      auto v = decode(x);
      v[0] = field.mul(v[0], field.primitive());
      return encode(v);
    }));
  }
  // Elementary transvections x_i += x_j generate SL_d(q).
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      gens.push_back(tabulate(n, [&](std::uint32_t x) {
        auto v = decode(x);
        v[i] = field.add(v[i], v[j]);
        return encode(v);
      }));
    }
  }
  return PermGroup(n, std::move(gens),
                   "agl(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

PermGroup make_sym(const GroupParams& params) {
  const unsigned m = params.m;
  if (m < 1) throw UsageError("sym needs m >= 1");
  std::vector<Permutation> gens;
  if (m == 1) {
    gens.push_back(Permutation::identity(1));
  } else {
    gens.push_back(tabulate(m, [](std::uint32_t x) { return x < 2 ? 1 - x : x; }));
    if (m > 2) gens.push_back(tabulate(m, [m](std::uint32_t x) { return (x + 1) % m; }));
  }
  return PermGroup(m, std::move(gens), "sym(" + std::to_string(m) + ")");
}

// Action of S_m on 2-subsets {i<j}, listed in lexicographic order.
PermGroup make_sym_pairs(const GroupParams& params) {
  const unsigned m = params.m;
  if (m < 3) throw UsageError("sym_pairs needs m >= 3");
  std::vector<std::vector<std::uint32_t>> index(m, std::vector<std::uint32_t>(m));
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      index[i][j] = index[j][i] = static_cast<std::uint32_t>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  const PermGroup base = make_sym(params);
  std::vector<Permutation> gens;
  for (const Permutation& s : base.generators()) {
    gens.push_back(tabulate(pairs.size(), [&](std::uint32_t x) {
      const auto [i, j] = pairs[x];
      return index[s[i]][s[j]];
    }));
  }
  return PermGroup(pairs.size(), std::move(gens), "sym_pairs(" + std::to_string(m) + ")");
}

PermGroup load_mathieu(const std::string& name, const GroupParams& params) {
  const std::string dir = params.data_dir.empty() ? default_data_dir() : params.data_dir;
  GeneratorFile file = read_generator_file(dir + "/groups/" + name + ".txt");
  return PermGroup(file.group.degree(), file.group.generators(), name);
}

}  // namespace

PermGroup make_named(const std::string& name, const GroupParams& params) {
  if (name == "agl1") return make_agl1(params);
  if (name == "pgl2") return make_pgl2(params);
  if (name == "agl") return make_agl(params);
  if (name == "sym") return make_sym(params);
  if (name == "sym_pairs") return make_sym_pairs(params);
  if (name == "mathieu22" || name == "mathieu23" || name == "mathieu24") {
    return load_mathieu(name, params);
  }
  throw UsageError("unknown group name '" + name + "'");
}

}  // namespace paforge
