#include "rcclab/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace rcclab::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::vector<std::int64_t> int_list(const json& j, const char* field) {
  if (!j.is_array()) throw InvalidInput(std::string(field) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(field) + " must contain integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<Elem> elem_list(const json& j, const char* field, std::size_t bound) {
  std::vector<Elem> out;
  for (auto v : int_list(j, field)) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
      throw InvalidInput(std::string(field) + " entry " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse(text);
}

// ---------------------------------------------------------------- writers

json to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  json table = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto r = g.row(static_cast<Elem>(a));
    table.push_back(std::vector<Elem>(r.begin(), r.end()));
  }
  j["table"] = std::move(table);
  j["identity"] = g.identity();
  j["generators"] = g.generators();
  if (!g.tag().empty()) j["tag"] = g.tag();
  return j;
}

json to_json(const GFPoly& f) { return {{"p", f.modulus()}, {"coeffs", f.coeffs()}}; }

json to_json(const GFMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Residue> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a(i, k);
    rows.push_back(r);
  }
  return {{"p", a.modulus()}, {"n", a.size()}, {"entries", rows}};
}

json to_json(const Automorphism& a) { return {{"perm", a.perm()}}; }

json to_json(const CycleStructure& cs) {
  json z = json::object();
  for (auto [d, c] : cs.counts()) z[std::to_string(d)] = c;
  return z;
}

json to_json(const FastPathCertificate& c) {
  return {{"kind", to_string(c.kind)},
          {"order", c.order},
          {"group_order", c.group_order},
          {"primes", c.primes},
          {"lambda", c.lambda.str()}};
}

json to_json(const ConstructedInstance& inst) {
  const auto& ex = inst.expected;
  json e = {{"group_order", ex.group_order}, {"automorphism_order", ex.automorphism_order}, {"rcc", ex.rcc}};
  if (ex.zeta) {
    json z = json::object();
    for (auto [d, c] : *ex.zeta) z[std::to_string(d)] = c;
    e["zeta"] = z;
  }
  if (ex.cycle_lengths) e["cycle_lengths"] = *ex.cycle_lengths;
  if (ex.fixed_subgroup_order) e["fixed_subgroup_order"] = *ex.fixed_subgroup_order;
  if (ex.fixed_subgroup_normal) e["fixed_subgroup_normal"] = true;
  json claims = json::array();
  for (const auto& c : ex.length_claims)
    claims.push_back({{"what", c.what}, {"length", c.length}, {"points", c.points.size()}});
  if (!claims.empty()) e["length_claims"] = claims;
  auto failures = verify(inst);
  return {{"name", inst.name},
          {"group", to_json(inst.group)},
          {"automorphism", to_json(inst.automorphism)},
          {"expected", e},
          {"verified", failures.empty()},
          {"failures", failures}};
}

// ---------------------------------------------------------------- readers

FiniteGroup group_from_json(const json& j, const Limits& limits) {
  return guarded("group", [&]() -> FiniteGroup {
    if (j.is_string()) return catalog(j.get<std::string>(), limits);
    if (!j.is_object()) throw InvalidInput("group must be an object or a catalog name");
    if (j.contains("catalog")) return catalog(j.at("catalog").get<std::string>(), limits);
    if (j.contains("group") && !j.contains("table")) return group_from_json(j.at("group"), limits);
    if (j.contains("degree")) {
      auto d = j.at("degree").get<std::int64_t>();
      if (d < 1) throw InvalidInput("degree must be positive");
      const auto degree = static_cast<std::size_t>(d);
      std::vector<std::vector<Elem>> gens;
      for (const auto& gen : j.at("generators")) {
        std::vector<std::vector<Elem>> cycles;
        if (!gen.is_array()) throw InvalidInput("each permutation generator must be an array");
        if (!gen.empty() && gen.front().is_array()) {
          for (const auto& c : gen) cycles.push_back(elem_list(c, "cycle", degree));
        } else {
          cycles.push_back(elem_list(gen, "cycle", degree));
        }
        gens.push_back(perm_from_cycles(degree, cycles));
      }
      auto g = permutation_group(degree, gens, limits);
      if (j.contains("tag")) g = g.with_tag(j.at("tag").get<std::string>());
      return g;
    }
    GroupTable t;
    const json& table = j.at("table");
    if (!table.is_array()) throw InvalidInput("table must be an array of rows");
    const std::size_t n = table.size();
    if (j.contains("order") && j.at("order").get<std::int64_t>() != static_cast<std::int64_t>(n))
      throw InvalidInput("order does not match the number of table rows");
    for (const auto& row : table) {
      auto r = int_list(row, "table row");
      std::vector<Elem> out;
      for (auto v : r) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= n)
          throw InvalidInput("table entry " + std::to_string(v) + " out of range");
        out.push_back(static_cast<Elem>(v));
      }
      t.table.push_back(std::move(out));
    }
    if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("identity")) t.identity = elem_list(json::array({j.at("identity")}), "identity", n)[0];
    if (j.contains("generators")) t.generators = elem_list(j.at("generators"), "generators", n);
    if (j.contains("tag")) t.tag = j.at("tag").get<std::string>();
    return validate_group(std::move(t), limits);
  });
}

GFPoly poly_from_json(const json& j) {
  return guarded("polynomial", [&] {
    auto p = j.at("p").get<std::int64_t>();
    if (p < 2) throw InvalidInput("modulus must be a prime");
    return GFPoly(static_cast<std::uint64_t>(p), int_list(j.at("coeffs"), "coeffs"));
  });
}

GFMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    auto p = j.at("p").get<std::int64_t>();
    if (p < 2) throw InvalidInput("modulus must be a prime");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : j.at("entries")) rows.push_back(int_list(r, "matrix row"));
    if (j.contains("n") && j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(rows.size()))
      throw InvalidInput("n does not match the number of rows");
    return GFMatrix(static_cast<std::uint64_t>(p), rows);
  });
}

Automorphism automorphism_from_json(const FiniteGroup& g, const json& j) {
  return guarded("automorphism", [&]() -> Automorphism {
    if (j.contains("automorphism")) return automorphism_from_json(g, j.at("automorphism"));
    if (j.contains("perm")) {
      auto perm = elem_list(j.at("perm"), "perm", g.order());
      if (perm.size() != g.order()) throw InvalidInput("perm length does not match the group order");
      return Automorphism::certify(g, std::move(perm));
    }
    auto gens = elem_list(j.at("gens"), "gens", g.order());
    auto images = elem_list(j.at("images"), "images", g.order());
    if (gens.size() != images.size()) throw InvalidInput("gens and images differ in length");
    auto a = automorphism_from_generator_images(g, gens, images);
    if (!a) throw InvalidInput("generator images do not extend to an automorphism");
    return *a;
  });
}

// ---------------------------------------------------------------- reports

json verdict_record(std::span<const Elem> perm, std::size_t group_order, bool nilpotent, bool all_certificates) {
  auto cs = cycle_structure(perm);
  auto v = check_rcc(perm);
  json r;
  r["rcc"] = v.holds;
  r["order"] = v.order;
  r["zeta"] = to_json(cs);
  r["lengths"] = v.lengths;
  r["max_length"] = v.max_length;
  r["lambda"] = Rational(cs.max_length(), group_order).str();
  auto certs = rcclab::all_certificates(cs, nilpotent);
  r["certificate"] = certs.empty() ? json(nullptr) : to_json(certs.front());
  if (all_certificates) {
    json all = json::array();
    for (const auto& c : certs) all.push_back(to_json(c));
    r["all_certificates"] = all;
  }
  r["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return r;
}

json verdict_record(const Automorphism& a, bool all_certificates) {
  return verdict_record(a.perm(), a.group().order(), is_nilpotent(a.group()), all_certificates);
}

json analyze(const json& input, const AnalyzeOptions& opts, const Limits& limits) {
  FiniteGroup g = group_from_json(input, limits);
  const bool nilpotent = is_nilpotent(g);
  json report;
  report["group"] = {{"order", g.order()},       {"tag", g.tag()},
                     {"abelian", g.is_abelian()}, {"nilpotent", nilpotent},
                     {"exponent", g.exponent()}};
  if (input.is_object() && input.contains("name")) report["input"] = input.at("name");

  std::optional<bool> packaged_rcc;
  if (input.is_object() && input.contains("automorphism")) {
    Automorphism a = automorphism_from_json(g, input.at("automorphism"));
    report["packaged"] = verdict_record(a.perm(), g.order(), nilpotent, opts.all_certificates);
    packaged_rcc = check_rcc(a).holds;
  }

  try {
    check_enumerable(g, limits);
  } catch (const BoundExceeded& e) {
    if (!packaged_rcc) throw;
    report["automorphisms"] = {{"skipped", e.what()}, {"bound", e.bound()}};
    report["rcc_group"] = *packaged_rcc ? json(nullptr) : json(false);
    return report;
  }

  std::uint64_t count = 0, non_rcc = 0, best = 1;
  json records = json::array();
  for_each_automorphism(
      g,
      [&](std::span<const Elem> perm) {
        ++count;
        auto v = check_rcc(perm);
        if (!v.holds) ++non_rcc;
        best = std::max(best, v.max_length);
        if (opts.records) records.push_back(verdict_record(perm, g.order(), nilpotent, opts.all_certificates));
      },
      limits);
  json autos = {{"count", count}, {"non_rcc_count", non_rcc}, {"lambda_group", Rational(best, g.order()).str()}};
  if (opts.records) autos["records"] = std::move(records);
  report["automorphisms"] = std::move(autos);
  report["rcc_group"] = non_rcc == 0;
  return report;
}

json frobenius_report(const GFMatrix& a) {
  auto d = frobenius_form(a);
  json factors = json::array();
  for (const auto& f : d.invariant_factors) factors.push_back(f.coeffs());
  return {{"p", a.modulus()},
          {"n", a.size()},
          {"invariant_factors", factors},
          {"basis_change", to_json(d.basis_change)},
          {"normal_form", to_json(d.normal_form())}};
}

json poly_order_report(const GFPoly& f, const Limits& limits) {
  json r = to_json(f);
  json factors = json::array();
  for (const auto& pf : poly_factor(f, limits))
    factors.push_back({{"coeffs", pf.factor.coeffs()}, {"exponent", pf.exponent}});
  r["factors"] = factors;
  r["order"] = poly_order(f, limits);
  if (static_cast<std::uint64_t>(f.degree()) <= limits.max_poly_iteration_degree)
    r["order_by_iteration"] = poly_order_by_iteration(f, limits);
  return r;
}

json regular_basis_report(const GFMatrix& a, const Limits& limits) {
  auto basis = regular_basis(a, limits);
  std::vector<std::uint64_t> lens;
  for (const auto& v : basis) lens.push_back(vector_cycle_length(a, v));
  return {{"p", a.modulus()},
          {"n", a.size()},
          {"order", matrix_order(a, limits)},
          {"basis", basis},
          {"cycle_lengths", lens}};
}

}  // namespace rcclab::io
