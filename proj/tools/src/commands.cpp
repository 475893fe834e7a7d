#include "superschur/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "superschur/schur.hpp"
#include "superschur/schurweyl.hpp"

namespace superschur::cli {

namespace {

std::string yes_no(bool b) { return b ? "pass" : "fail"; }

std::string str(std::size_t v) { return std::to_string(v); }

bool all_zero(const std::vector<Integer>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

std::string rank_text(Superrank r) { return str(r.first) + "|" + str(r.second); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

salg::CliffordSign parse_clifford_sign(const std::string& text) {
  if (text == "+1" || text == "1") return salg::CliffordSign::Plus;
  if (text == "-1" || text == "−1") return salg::CliffordSign::Minus;
  throw std::invalid_argument("--clifford-sign takes +1 or -1, got " + text);
}

struct Common {
  std::string ring = "Z";
  std::uint64_t prime = 10007;
  std::size_t max_dim = Limits{}.max_algebra_dim;
  std::size_t max_words = Limits{}.max_tensor_words;
  std::string clifford = "+1";
  std::string out;

  BuildOptions options() const {
    BuildOptions o;
    o.ring = coeff::make_ring(ring);
    o.clifford = parse_clifford_sign(clifford);
    o.limits = Limits{max_dim, max_words};
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--ring", c.ring, "Coefficient ring: Z or Z/<n>")->capture_default_str();
  app->add_option("--prime", c.prime, "Prime for rank computations")->capture_default_str();
  app->add_option("--max-dim", c.max_dim, "Cap on constructed algebra dimension")->capture_default_str();
  app->add_option("--max-words", c.max_words, "Cap on tensor word spaces")->capture_default_str();
  app->add_option("--clifford-sign", c.clifford, "c^2 in c1: +1 or -1")->capture_default_str();
  app->add_option("--out", c.out, "Write JSON output to this file");
}

// Emits JSON to --out when given, else nothing; text always goes to `out`.
void emit(const Common& c, const Json& j) {
  if (!c.out.empty()) write_file(c.out, j.dump(1) + "\n");
}

int cmd_dims(const std::string& text, const Common& c, std::ostream& out) {
  const auto spec = parse_spec(text);
  const auto dims = spec_dims(spec);
  const auto terms = gamma_breakdown(spec);
  out << "spec: " << spec.to_string() << "\n"
      << "total: " << dims.total() << "\n"
      << "even: " << dims.even << "\n"
      << "odd: " << dims.odd << "\n";
  Json j;
  j["spec"] = spec.to_string();
  j["total"] = dims.total().str();
  j["even"] = dims.even.str();
  j["odd"] = dims.odd.str();
  if (!terms.empty()) {
    out << "divided power breakdown (j odd letters):\n";
    Json arr = Json::array();
    for (const auto& t : terms) {
      out << "  j=" << t.odd_letters << ": " << t.even_choices << " * " << t.odd_choices << " = "
          << t.value() << "\n";
      Json e;
      e["odd_letters"] = t.odd_letters;
      e["even_choices"] = t.even_choices.str();
      e["odd_choices"] = t.odd_choices.str();
      e["value"] = t.value().str();
      arr.push_back(std::move(e));
    }
    j["gamma"] = std::move(arr);
  }
  emit(c, j);
  return 0;
}

int cmd_table(const std::string& text, const Common& c, std::ostream& out) {
  const auto algebra = build(parse_spec(text), c.options());
  const auto body = dump_text(algebra);
  if (c.out.empty()) out << body;
  else write_file(c.out, body);
  return 0;
}

int cmd_load(const std::string& path, bool check, const Common& c, std::ostream& out) {
  const auto algebra = load_text(read_file(path));
  out << "ring: " << algebra.ring().to_string() << "\n"
      << "dim: " << algebra.dim() << " (" << algebra.carrier().even_dim() << " even, "
      << algebra.carrier().odd_dim() << " odd)\n";
  if (!c.out.empty()) write_file(c.out, dump_text(algebra));
  if (!check) return 0;
  const auto r = salg::check_superalgebra(algebra);
  out << "axioms: " << yes_no(r.passed()) << " (" << r.triples_checked << " triples)\n";
  for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i)
    out << "  " << r.violations[i].describe() << "\n";
  return r.passed() ? 0 : 1;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = std::move(p);
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["passed"] = passed();
  return j;
}

std::string Report::to_text() const {
  std::string s = "suite: " + suite + "\nparams:";
  for (const auto& [k, v] : params) s += " " + k + "=" + v;
  s += "\n";
  for (const auto& c : checks) s += "[" + yes_no(c.passed) + "] " + c.name + ": " + c.detail + "\n";
  return s + "result: " + yes_no(passed()) + "\n";
}

Superrank parse_superrank(const std::string& text) {
  auto number = [&](const std::string& t) -> std::size_t {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
      throw std::invalid_argument("malformed superrank '" + text + "'");
    return std::stoul(t);
  };
  const auto bar = text.find('|');
  if (bar == std::string::npos) return {number(text), 0};
  return {number(text.substr(0, bar)), number(text.substr(bar + 1))};
}

Report verify_axioms(const AlgebraSpec& spec, const BuildOptions& options) {
  Report rep{"axioms", {{"spec", spec.to_string()}, {"ring", options.ring.to_string()}}, {}};
  const auto algebra = build(spec, options);
  const auto r = salg::check_superalgebra(algebra);
  std::string detail = str(algebra.dim()) + "-dimensional, " + str(r.triples_checked) + " basis triples";
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) detail += "; " + r.violations[i].describe();
  rep.checks.push_back({"superalgebra axioms", r.passed(), detail});
  return rep;
}

Report verify_idempotents(const AlgebraSpec& base, std::size_t n, std::size_t d,
                          const BuildOptions& options) {
  Report rep{"idempotents",
             {{"base", base.to_string()}, {"n", str(n)}, {"d", str(d)}, {"ring", options.ring.to_string()}},
             {}};
  const auto s = schur::schur_algebra(build(base, options), n, d, options.limits);
  const auto ws = schur::weights(n, d);
  std::vector<std::vector<Integer>> xis;
  bool even = true, idem = true, orth = true;
  std::vector<Integer> total(s.dim());
  for (const auto& l : ws) {
    auto xi = schur::weight_idempotent(s, l);
    for (std::size_t i = s.labels().module().even_dim(); i < xi.size(); ++i) even &= xi[i] == 0;
    idem &= s.multiply(xi, xi) == xi;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] = options.ring.reduce(total[i] + xi[i]);
    xis.push_back(std::move(xi));
  }
  for (std::size_t i = 0; i < xis.size(); ++i)
    for (std::size_t j = 0; j < xis.size(); ++j)
      if (i != j) orth &= all_zero(s.multiply(xis[i], xis[j]));
  const std::string count = str(ws.size()) + " weights";
  rep.checks.push_back({"even", even, count});
  rep.checks.push_back({"idempotent", idem, count});
  rep.checks.push_back({"pairwise orthogonal", orth, str(ws.size() * (ws.size() - 1)) + " ordered pairs"});
  rep.checks.push_back({"sum is the unit", total == s.unit(), "dim S = " + str(s.dim())});
  return rep;
}

Report verify_surjectivity(const AlgebraSpec& base, std::size_t d, Superrank middle, Superrank source,
                           Superrank target, std::uint64_t prime, const BuildOptions& options) {
  Report rep{"surjectivity",
             {{"base", base.to_string()},
              {"d", str(d)},
              {"middle", rank_text(middle)},
              {"source", rank_text(source)},
              {"target", rank_text(target)},
              {"prime", str(prime)}},
             {}};
  const auto r = schur::composition_surjectivity_check(build(base, options), d, middle.first,
                                                       middle.second, source, target, prime,
                                                       options.limits);
  rep.checks.push_back({"composition is surjective", r.full_rank(),
                        "rank " + str(r.rank) + " of target dim " + str(r.target_dim) + " (outer " +
                            str(r.dim_outer) + ", inner " + str(r.dim_inner) + ")"});
  return rep;
}

Report verify_schur_weyl(const AlgebraSpec& base, std::size_t n, std::size_t d, std::uint64_t prime,
                         const BuildOptions& options) {
  Report rep{"schur-weyl",
             {{"base", base.to_string()}, {"n", str(n)}, {"d", str(d)}, {"prime", str(prime)}},
             {}};
  const schurweyl::Bimodule b(build(base, options), n, d, options.limits);
  const auto& c = b.checks();
  rep.checks.push_back({"bimodule axioms", true,
                        str(c.left_pairs) + " left pairs, " + str(c.right_pairs) + " right pairs, " +
                            str(c.commuting_pairs) + " commuting pairs" +
                            (c.exhaustive ? " (exhaustive)" : " (sampled)")});
  const auto w = schurweyl::wreath_to_end(b, prime);
  rep.checks.push_back({"homomorphism", w.is_homomorphism,
                        "all " + str(w.wreath_dim * w.wreath_dim) + " basis pairs"});
  rep.checks.push_back({"injective", w.injective(),
                        "image rank " + str(w.image_rank) + ", dim of wreath product " + str(w.wreath_dim)});
  rep.checks.push_back({"image equals left commutant", w.surjective_onto_commutant(),
                        "commutant dim " + str(w.commutant_dim) + ", image " +
                            (w.image_in_commutant ? "contained" : "not contained")});
  if (n >= d) {
    const auto x = schurweyl::xi_omega_check(b, prime);
    rep.checks.push_back({"xi_omega even idempotent", x.even && x.idempotent,
                          std::string("even: ") + yes_no(x.even) + ", idempotent: " + yes_no(x.idempotent)});
    rep.checks.push_back({"S xi_omega matches tensor space", x.left_rank == x.tensor_dim && x.intertwiner_rank == x.tensor_dim,
                          "rank " + str(x.left_rank) + ", intertwiner rank " + str(x.intertwiner_rank) +
                              ", dim " + str(x.tensor_dim)});
    rep.checks.push_back({"xi_omega S xi_omega matches wreath product", x.corner_rank == x.wreath_dim,
                          "rank " + str(x.corner_rank) + ", dim " + str(x.wreath_dim)});
  }
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and checks for generalized Schur superalgebras", "superschur"};
  app.require_subcommand(1);
  Common common;

  auto* dims = app.add_subcommand("dims", "Print dimensions and the divided power breakdown");
  std::string dims_spec;
  dims->add_option("spec", dims_spec, "Algebra descriptor")->required();
  add_common(dims, common);

  auto* table = app.add_subcommand("table", "Dump structure constants as JSON");
  std::string table_spec;
  table->add_option("spec", table_spec, "Algebra descriptor")->required();
  add_common(table, common);

  auto* load = app.add_subcommand("load", "Read a structure dump back");
  std::string load_path;
  bool load_check = false;
  load->add_option("file", load_path, "JSON structure dump")->required();
  load->add_flag("--check", load_check, "Run the superalgebra axiom check");
  add_common(load, common);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, verify_spec, base = "k", middle = "1|0", source = "1|0", target = "1|0";
  std::size_t n = 1, d = 1;
  verify->add_option("suite", suite, "axioms | idempotents | surjectivity | schur-weyl")
      ->required()
      ->check(CLI::IsMember({"axioms", "idempotents", "surjectivity", "schur-weyl"}));
  verify->add_option("spec", verify_spec, "Algebra descriptor (axioms suite)");
  verify->add_option("--base", base, "Base algebra descriptor")->capture_default_str();
  verify->add_option("--n", n, "Matrix size")->capture_default_str();
  verify->add_option("--d", d, "Degree")->capture_default_str();
  verify->add_option("--middle", middle, "Middle superrank m|n (surjectivity)")->capture_default_str();
  verify->add_option("--source", source, "Source superrank p|q (surjectivity)")->capture_default_str();
  verify->add_option("--target", target, "Target superrank s|t (surjectivity)")->capture_default_str();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dims) return cmd_dims(dims_spec, common, out);
    if (*table) return cmd_table(table_spec, common, out);
    if (*load) return cmd_load(load_path, load_check, common, out);

    const auto options = common.options();
    Report rep;
    if (suite == "axioms") {
      if (verify_spec.empty()) throw std::invalid_argument("verify axioms needs an algebra descriptor");
      rep = verify_axioms(parse_spec(verify_spec), options);
    } else if (suite == "idempotents") {
      rep = verify_idempotents(parse_spec(base), n, d, options);
    } else if (suite == "surjectivity") {
      rep = verify_surjectivity(parse_spec(base), d, parse_superrank(middle), parse_superrank(source),
                                parse_superrank(target), common.prime, options);
    } else {
      rep = verify_schur_weyl(parse_spec(base), n, d, common.prime, options);
    }
    out << rep.to_text();
    emit(common, rep.to_json());
    return rep.passed() ? 0 : 1;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace superschur::cli
