#include "mtk/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "mtk/catalog.hpp"
#include "mtk/doubles.hpp"
#include "mtk/error.hpp"
#include "mtk/galois.hpp"
#include "mtk/io.hpp"
#include "mtk/structure.hpp"

namespace mtk {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::string approx(const CycloNum& x) {
  const auto z = x.to_complex();
  std::ostringstream os;
  os << std::setprecision(10) << z.real();
  if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string show(const CycloNum& x) {
  if (auto q = x.as_rational()) return q->get_str();
  return x.minimize_order().to_string() + " (~ " + approx(x) + ")";
}

std::string show_root(const RootOfUnity& r) {
  if (r.den() == 1) return "1";
  return "exp(2 pi i " + std::to_string(r.num()) + "/" + std::to_string(r.den()) + ")";
}

std::string set_names(const PreModularData& d, const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + d.ring.label(s[i]);
  return out + "}";
}

Json set_json(const PreModularData& d, const LabelSet& s) {
  Json out = Json::array();
  for (Label i : s) out.push_back(d.ring.label(i));
  return out;
}

PreModularData resolve_datum(const std::string& ref) {
  if (std::filesystem::exists(ref)) return load_premodular(ref);
  try {
    return catalog_get(ref);
  } catch (const UsageError&) {
    throw UsageError("'" + ref + "' is neither a readable file nor a catalog entry");
  }
}

GroupData resolve_group(const std::string& ref) {
  if (std::filesystem::exists(ref)) return load_group(ref);
  return builtin_group(ref);
}

LabelSet parse_labels(const PreModularData& d, const std::string& list) {
  LabelSet out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (auto l = d.ring.find_label(tok)) {
      out.push_back(*l);
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used == tok.size() && v >= 0 && v < d.rank()) {
        out.push_back(v);
        continue;
      }
    } catch (const std::exception&) {
    }
    throw UsageError("unknown label '" + tok + "'");
  }
  out.push_back(0);
  return make_label_set(out);
}

std::string character_string(const Character& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + show_root(c[i]);
  return s + ")";
}

Json character_json(const Character& c) {
  Json out = Json::array();
  for (const auto& r : c) out.push_back(root_to_json(r));
  return out;
}

struct Context {
  bool json = false;
  std::string out_path;
  std::ostringstream out;

  void emit(const Json& j) { out << canonical_dump(j); }
  void save_if_requested(const PreModularData& d) const {
    if (!out_path.empty()) save(d, out_path);
  }
};

void describe_datum(Context& c, const PreModularData& d) {
  c.out << "rank " << d.rank() << "\n";
  for (int i = 0; i < d.rank(); ++i)
    c.out << "  " << d.ring.label(i) << ": d = " << show(d.dim(i)) << ", twist = " << show_root(d.twist[u(i)]) << "\n";
  c.out << "dim = " << show(gauss_sums(d).dim) << "\n";
}

void cmd_verify(Context& c, const PreModularData& d) {
  const ModularityCertificate cert = is_modular(d);
  const GaussSums g = gauss_sums(d);
  const DimensionVector pf = perron_frobenius_dims(d.ring);
  double worst = 0.0;
  for (int i = 0; i < d.rank(); ++i) worst = std::max(worst, std::abs(pf.dims[u(i)] - d.dim(i).to_complex().real()));
  const auto quant = check_dimension_quantization(pf);
  Json flagged = Json::array();
  for (const auto& q : quant)
    if (q.flagged) flagged.push_back(d.ring.label(q.label));
  if (c.json) {
    Json dims = Json::array();
    for (int i = 0; i < d.rank(); ++i) dims.push_back(cyclo_report(d.dim(i)));
    c.emit({{"rank", d.rank()},
            {"invariants", "ok"},
            {"dims", dims},
            {"dim", cyclo_report(g.dim)},
            {"gauss_sum", cyclo_report(g.delta)},
            {"criteria",
             {{"sprime_invertible", cert.sprime_invertible},
              {"trivial_center", cert.trivial_center},
              {"gauss_norm_equals_dim", cert.gauss_criterion}}},
            {"center", set_json(d, cert.center)},
            {"modular", cert.modular},
            {"pf_max_deviation", worst},
            {"quantization_flagged", flagged}});
    return;
  }
  describe_datum(c, d);
  c.out << "invariants: ok\n";
  c.out << "Gauss sum = " << show(g.delta) << "\n";
  c.out << "S' invertible: " << (cert.sprime_invertible ? "yes" : "no") << "\n";
  c.out << "center: " << set_names(d, cert.center) << "\n";
  c.out << "|Delta|^2 = dim: " << (cert.gauss_criterion ? "yes" : "no") << "\n";
  c.out << "Perron-Frobenius deviation: " << worst << "\n";
  c.out << "quantization flags: " << flagged.size() << "\n";
  c.out << "modular: " << (cert.modular ? "yes" : "no") << " (" << cert.criteria_passed() << "/3 criteria)\n";
}

void cmd_center(Context& c, const PreModularData& d) {
  const LabelSet z = transparent_objects(d);
  if (c.json) c.emit({{"center", set_json(d, z)}, {"dim", cyclo_report(subset_dimension(d, z))}});
  else c.out << "center: " << set_names(d, z) << "\ndim = " << show(subset_dimension(d, z)) << "\n";
}

void cmd_commutant(Context& c, const PreModularData& d, const LabelSet& k) {
  if (!is_fusion_closed(d.ring, k))
    throw UsageError("--sub must be fusion-closed; its closure is " +
                     set_names(d, fusion_subring_closure(d.ring, k)));
  const LabelSet kp = relative_commutant(d, k);
  if (c.json) c.emit({{"sub", set_json(d, k)}, {"commutant", set_json(d, kp)}, {"dim", cyclo_report(subset_dimension(d, kp))}});
  else c.out << "commutant of " << set_names(d, k) << ": " << set_names(d, kp) << "\n";
}

Json grading_json(const PreModularData& d, const GradingDecomposition& g) {
  Json grades = Json::array();
  for (const auto& gr : g.grades) grades.push_back({{"character", character_json(gr.character)}, {"labels", set_json(d, gr.labels)}});
  return {{"grades", grades}, {"full", g.full}};
}

void print_grading(Context& c, const PreModularData& d, const GradingDecomposition& g) {
  for (const auto& gr : g.grades) c.out << "  grade " << character_string(gr.character) << ": " << set_names(d, gr.labels) << "\n";
  c.out << "grading full: " << (g.full ? "yes" : "no") << "\n";
}

void report_condensation(Context& c, const CondensationResult& r) {
  const auto& d = r.input;
  c.save_if_requested(r.condensed);
  if (c.json) {
    Json orbits = Json::array();
    for (const auto& o : r.orbits.orbits)
      orbits.push_back({{"members", set_json(d, o.members)},
                        {"stabilizer", set_json(d, o.stabilizer)},
                        {"untwisted_stabilizer", set_json(d, o.untwisted_stabilizer)},
                        {"multiplicity", o.multiplicity}});
    Json embedding = Json::object();
    for (int i = 0; i < d.rank(); ++i) {
      Json list = Json::array();
      for (const auto& [idx, mult] : r.embedding_table[u(i)]) list.push_back({r.condensed.ring.label(idx), mult});
      embedding[d.ring.label(i)] = list;
    }
    c.emit({{"currents", set_json(d, r.currents.elements)},
            {"local_part", set_json(d, r.local)},
            {"grading", grading_json(d, r.grading)},
            {"orbits", orbits},
            {"embedding_table", embedding},
            {"sz_matrices", fixed_point_matrices_to_json(r.fixed_point_matrices, d)},
            {"solver_used", r.solver_used},
            {"modular", is_modular(r.condensed).modular},
            {"condensed", to_document(r.condensed)}});
    return;
  }
  c.out << "currents: " << set_names(d, r.currents.elements) << "\n";
  c.out << "local part: " << set_names(d, r.local) << "\n";
  print_grading(c, d, r.grading);
  for (const auto& o : r.orbits.orbits)
    c.out << "  orbit " << set_names(d, o.members) << ", stabilizer " << set_names(d, o.stabilizer)
          << ", untwisted " << set_names(d, o.untwisted_stabilizer) << "\n";
  if (r.solver_used) c.out << "fixed points resolved by the S^[Z] search\n";
  c.out << "condensed datum:\n";
  describe_datum(c, r.condensed);
  if (const auto grp = fusion_group_structure(r.condensed.ring))
    c.out << "fusion group: " << group_structure_name(*grp) << "\n";
  c.out << "modular: " << (is_modular(r.condensed).modular ? "yes" : "no") << "\n";
}

void emit_datum(Context& c, const PreModularData& d, const std::string& title) {
  c.save_if_requested(d);
  if (c.json) {
    c.emit(to_document(d));
    return;
  }
  c.out << title << "\n";
  describe_datum(c, d);
  if (const auto grp = fusion_group_structure(d.ring)) c.out << "fusion group: " << group_structure_name(*grp) << "\n";
  c.out << "modular: " << (is_modular(d).modular ? "yes" : "no") << "\n";
}

void cmd_factor(Context& c, const PreModularData& d) {
  const FactorizationReport f = factorize(d);
  if (c.json) {
    Json factors = Json::array();
    for (const auto& x : f.factors) factors.push_back(to_document(x));
    Json pairing = Json::object();
    for (int t = 0; t < d.rank(); ++t) {
      Json tuple = Json::array();
      for (std::size_t k = 0; k < f.factors.size(); ++k) tuple.push_back(f.factors[k].ring.label(f.pairing[u(t)][k]));
      pairing[d.ring.label(t)] = tuple;
    }
    c.emit({{"factors", factors}, {"pairing", pairing}, {"verified", f.verified}, {"prime", f.factors.size() == 1}});
    return;
  }
  c.out << f.factors.size() << " prime factor(s)" << (f.factors.size() == 1 ? " (input is prime)" : "") << "\n";
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    c.out << "factor " << k << ": rank " << f.factors[k].rank() << ", labels";
    for (const auto& l : f.factors[k].ring.labels()) c.out << " " << l;
    c.out << ", dim = " << show(gauss_sums(f.factors[k]).dim) << "\n";
  }
  c.out << "pairing verified: " << (f.verified ? "yes" : "no") << "\n";
}

void cmd_dct(Context& c, const PreModularData& d) {
  const CommutantReport r = double_commutant_report(d);
  if (c.json) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"sub", set_json(d, e.sub)},
                         {"commutant", set_json(d, e.commutant)},
                         {"double_commutant", set_json(d, e.double_commutant)},
                         {"dim_sub", cyclo_report(e.dim_sub)},
                         {"dim_commutant", cyclo_report(e.dim_commutant)},
                         {"double_commutant_ok", e.double_commutant_ok},
                         {"dimension_ok", e.dimension_ok}});
    c.emit({{"dim", cyclo_report(r.dim)}, {"entries", entries}, {"all_ok", r.all_ok()}});
  } else {
    for (const auto& e : r.entries)
      c.out << set_names(d, e.sub) << ": K' = " << set_names(d, e.commutant) << ", K'' = K "
            << (e.double_commutant_ok ? "yes" : "NO") << ", dim K dim K' = dim C " << (e.dimension_ok ? "yes" : "NO")
            << "\n";
    c.out << "double commutant theorem: " << (r.all_ok() ? "holds" : "FAILS") << "\n";
  }
  if (!r.all_ok()) throw VerificationError("double commutant theorem fails");
}

void cmd_verlinde(Context& c, const PreModularData& d) {
  const ModularData m = normalized_ST(d);
  const FusionRing ring = verlinde_fusion(m);
  const auto grp = fusion_group_structure(ring);
  if (c.json) {
    Json fusion = Json::array();
    for (const auto& [i, j, k, n] : ring.nonzero()) fusion.push_back({i, j, k, n});
    c.emit({{"fusion", fusion}, {"matches_stored", true}, {"fusion_group", grp ? Json(group_structure_name(*grp)) : Json()}});
    return;
  }
  c.out << "Verlinde fusion matches the stored fusion rules\n";
  for (const auto& [i, j, k, n] : ring.nonzero())
    if (i <= j) c.out << "  " << ring.label(i) << " x " << ring.label(j) << " -> " << n << " " << ring.label(k) << "\n";
  c.out << "fusion group: " << (grp ? group_structure_name(*grp) : std::string("none (not pointed)")) << "\n";
}

void cmd_gauss(Context& c, const PreModularData& d) {
  const GaussSums g = gauss_sums(d);
  const auto gp = gauss_phase(d.dims(), d.twist);
  if (c.json) {
    Json j{{"gauss_sum", cyclo_report(g.delta)}, {"dim", cyclo_report(g.dim)}, {"gauss_norm", cyclo_report(g.delta * g.delta.conj())}};
    if (gp) j["sqrt_dim"] = cyclo_report(gp->total_dim), j["phase"] = root_to_json(gp->phase);
    c.emit(j);
    return;
  }
  c.out << "Delta = " << show(g.delta) << "\ndim = " << show(g.dim) << "\n|Delta|^2 = " << show(g.delta * g.delta.conj()) << "\n";
  if (gp) c.out << "sqrt(dim) = " << show(gp->total_dim) << ", Delta/sqrt(dim) = " << show_root(gp->phase) << "\n";
}

void cmd_catalog_list(Context& c) {
  const auto entries = catalog_list();
  if (c.json) {
    Json list = Json::array();
    for (const auto& e : entries) list.push_back({{"name", e.name}, {"kind", to_string(e.kind)}, {"note", e.provenance}});
    c.emit(list);
    return;
  }
  for (const auto& e : entries) c.out << std::left << std::setw(16) << e.name << std::setw(12) << to_string(e.kind) << e.provenance << "\n";
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with premodular and modular tensor-category data", "mtk"};
  app.require_subcommand(1);
  Context ctx;
  app.add_flag("--json", ctx.json, "Print JSON instead of a text report");
  app.add_option("--out", ctx.out_path, "Write the resulting datum to PATH");

  std::string file;
  std::string file2;
  std::string labels;
  std::string sz_path;
  std::string group;
  int p = 0;
  std::string catalog_name;

  const auto with_file = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("FILE", file, "Data file or catalog name")->required();
    s->fallthrough();
    return s;
  };
  auto* verify = with_file("verify", "Check every invariant and the modularity criteria");
  auto* center = with_file("center", "Transparent objects");
  auto* commutant = with_file("commutant", "Relative commutant of a fusion subcategory");
  commutant->add_option("--sub", labels, "Comma-separated labels")->required();
  auto* condense_cmd = with_file("condense", "Condense a bosonic simple-current group");
  condense_cmd->add_option("--currents", labels, "Comma-separated labels")->required();
  condense_cmd->add_option("--sz", sz_path, "JSON with sz_matrices / untwisted_stabilizers");
  auto* closure = with_file("closure", "Modular closure by the center");
  closure->add_option("--sz", sz_path, "JSON with sz_matrices / untwisted_stabilizers");
  auto* grading = with_file("grading", "Monodromy grading by a current group");
  grading->add_option("--currents", labels, "Comma-separated labels")->required();
  auto* dbl = app.add_subcommand("double", "Quantum double D(G) or D^p(Z/n)");
  dbl->add_option("--group", group, "Built-in group (Z<n>, Zn:<n>, S3) or group file")->required();
  dbl->add_option("--p", p, "Cocycle parameter for cyclic groups");
  dbl->fallthrough();
  auto* repcat = app.add_subcommand("repcat", "Symmetric datum Rep(G)");
  repcat->add_option("--group", group, "Built-in group or group file")->required();
  repcat->fallthrough();
  auto* product = app.add_subcommand("product", "Deligne product");
  product->add_option("A", file, "First datum")->required();
  product->add_option("B", file2, "Second datum")->required();
  product->fallthrough();
  auto* factor = with_file("factor", "Prime factorization");
  auto* dct = with_file("dct", "Double commutant theorem report");
  auto* verlinde = with_file("verlinde", "Verlinde fusion from the normalized S");
  auto* gauss = with_file("gauss", "Gauss sum and dimension");
  auto* catalog = app.add_subcommand("catalog", "Built-in data");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  cat_list->fallthrough();
  auto* cat_get = catalog->add_subcommand("get", "Print an entry as a data file");
  cat_get->add_option("NAME", catalog_name)->required();
  cat_get->fallthrough();
  catalog->fallthrough();

  CommandResult result;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  try {
    if (verify->parsed()) cmd_verify(ctx, resolve_datum(file));
    else if (center->parsed()) cmd_center(ctx, resolve_datum(file));
    else if (commutant->parsed()) {
      const auto d = resolve_datum(file);
      cmd_commutant(ctx, d, parse_labels(d, labels));
    } else if (condense_cmd->parsed() || closure->parsed()) {
      const auto d = resolve_datum(file);
      CondenseOptions opts;
      if (!sz_path.empty()) opts = condense_options_from_json(read_json(sz_path), d, "$");
      if (closure->parsed()) report_condensation(ctx, modular_closure(d, opts));
      else report_condensation(ctx, condense(d, check_symmetric_subcategory(d, parse_labels(d, labels)), opts));
    } else if (grading->parsed()) {
      const auto d = resolve_datum(file);
      const CurrentGroup k = simple_current_group(d, parse_labels(d, labels));
      const GradingDecomposition g = grading_decomposition(d, k);
      if (ctx.json) ctx.emit(grading_json(d, g));
      else print_grading(ctx, d, g);
    } else if (dbl->parsed()) {
      const GroupData g = resolve_group(group);
      const bool cyclic = g.classes.size() == static_cast<std::size_t>(g.order()) && g.name.rfind("Z", 0) == 0;
      const bool twisted = dbl->count("--p") > 0;
      if (twisted && !cyclic) throw UsageError("--p is supported for cyclic groups only");
      const PreModularData d = twisted ? twisted_cyclic_double({g.order(), p}) : untwisted_double(g);
      emit_datum(ctx, d, "double of " + g.name + (twisted ? " with cocycle p = " + std::to_string(p) : ""));
    } else if (repcat->parsed()) {
      const GroupData g = resolve_group(group);
      emit_datum(ctx, rep_category(g), "Rep(" + g.name + ")");
    } else if (product->parsed()) {
      emit_datum(ctx, deligne_product(resolve_datum(file), resolve_datum(file2)), "Deligne product");
    } else if (factor->parsed()) cmd_factor(ctx, resolve_datum(file));
    else if (dct->parsed()) cmd_dct(ctx, resolve_datum(file));
    else if (verlinde->parsed()) cmd_verlinde(ctx, resolve_datum(file));
    else if (gauss->parsed()) cmd_gauss(ctx, resolve_datum(file));
    else if (cat_list->parsed()) cmd_catalog_list(ctx);
    else if (cat_get->parsed()) {
      const PreModularData d = catalog_get(catalog_name);
      ctx.save_if_requested(d);
      ctx.out << canonical_dump(to_document(d));
    }
  } catch (const FixedPointResolutionError& e) {
    err << "error: " << e.what() << "\npartial result:\n";
    for (std::size_t i = 0; i < e.partial().labels.size(); ++i)
      err << "  " << e.partial().labels[i] << ": d = " << show(e.partial().dims[i]) << ", twist = "
          << show_root(e.partial().twist[i]) << "\n";
    result.exit_code = 1;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }
  result.out = ctx.out.str();
  result.err = err.str();
  return result;
}

}  // namespace mtk
