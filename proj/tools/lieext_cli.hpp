#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process with captured streams.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieext/lieext.hpp"

namespace lieext::cli {

enum class Status : int { pass = 0, fail = 1, input_error = 2 };

struct GlobalOptions {
  std::string format = "text";
  double tolerance = default_tolerance;
  std::uint64_t seed = 0;
  std::size_t cap = CheckOptions{}.cap;
  std::size_t threads = 1;

  [[nodiscard]] bool json() const { return format == "json"; }
  [[nodiscard]] CheckOptions check() const { return {threads, cap}; }
};

namespace detail {

using io::Json;

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::input_error: return "input-error";
  }
  return "?";
}

inline Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

inline AlphaVector parse_alpha(const std::string& text) {
  AlphaVector alpha;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) alpha.coords.push_back(Rational::parse(item));
  lieext::detail::require(!alpha.coords.empty() && text.back() != ',', "--alpha needs a comma-separated list");
  return alpha;
}

inline std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

inline std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].to_string();
  return out;
}

inline std::string fixed(double x, int digits = 12) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

inline std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

inline Json violation_json(const JacobiViolation& v) {
  return Json{{"a", v.a}, {"b", v.b}, {"c", v.c}, {"f", v.f}, {"residual", v.residual.to_string()}};
}

/// A builtin name, or a path to a structure-constants file.
inline StructureConstants load_algebra(const std::string& source) {
  if (source.ends_with(".json") || std::filesystem::exists(source))
    return io::structure_constants_from_json(io::parse_json(io::read_file(source), source));
  return builtin_algebra(source);
}

inline WTensor load_w(const std::string& path) { return io::wtensor_from_json(io::parse_json(io::read_file(path), path)); }

inline std::string render(const PolyFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [exps, coef] = *it;
    Rational c = coef;
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t a = 0; a < exps.size(); ++a) {
      if (exps[a] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "xi" + std::to_string(a);
      if (exps[a] > 1) mono += "^" + std::to_string(exps[a]);
    }
    if (mono.empty()) out += c.to_string();
    else if (c == Rational(1)) out += mono;
    else out += c.to_string() + "*" + mono;
    first = false;
  }
  return out;
}

// --- make-w ------------------------------------------------------------------

struct MakeWArgs {
  std::string kind;
  std::size_t n = 0;
  std::string alpha;
  std::string lambda;
  std::string input;
  std::string output;
};

inline Status make_w(const MakeWArgs& a, const GlobalOptions&, std::ostream& out) {
  auto need_n = [&] { lieext::detail::require(a.n >= 1, "make-w " + a.kind + " needs --n >= 1"); };
  std::optional<WTensor> w;
  if (a.kind == "direct-sum") {
    need_n();
    w = direct_sum_w(a.n);
  } else if (a.kind == "circulant") {
    lieext::detail::require(!a.alpha.empty(), "make-w circulant needs --alpha");
    w = circulant_w(parse_alpha(a.alpha));
  } else if (a.kind == "leibnitz") {
    need_n();
    w = leibnitz_w(a.n);
  } else if (a.kind == "leibnitz-deform") {
    need_n();
    lieext::detail::require(!a.lambda.empty(), "make-w leibnitz-deform needs --lambda");
    w = leibnitz_deform(a.n, Rational::parse(a.lambda));
  } else if (a.kind == "truncate") {
    lieext::detail::require(!a.input.empty(), "make-w truncate needs --input");
    w = truncate_to_solvable(load_w(a.input));
  } else {
    throw InvalidArgument("unknown W-tensor kind '" + a.kind + "'");
  }
  const std::string text = io::to_json(*w).dump(2) + "\n";
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + a.output + "'");
    file << text;
  }
  return Status::pass;
}

// --- validate-w --------------------------------------------------------------

inline Status validate_w(const std::string& path, const GlobalOptions& g, std::ostream& out) {
  const WTensor w = load_w(path);
  const WValidationReport r = wtensor_validate(w, g.check());
  const Status status = from_bool(r.ok());
  if (g.json()) {
    Json j{{"command", "validate-w"}, {"status", status_name(status)}, {"n", w.n()}};
    if (r.violation) {
      j["violation"] = Json{{"kind", r.violation->kind == WViolation::Kind::symmetry ? "symmetry" : "associativity"},
                            {"indices", r.violation->indices},
                            {"residual", r.violation->residual.to_string()}};
    } else {
      j["violation"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else if (r.ok()) {
    out << "PASS  W-tensor n=" << w.n() << " is symmetric and its slices commute\n";
  } else if (r.violation->kind == WViolation::Kind::symmetry) {
    out << "FAIL  symmetry violated at (i,j,s)=(" << join(r.violation->indices)
        << "): W^{ij}_s - W^{ji}_s = " << r.violation->residual << "\n";
  } else {
    out << "FAIL  slice commutation violated at (i,s,q,p)=(" << join(r.violation->indices)
        << "): residual " << r.violation->residual << "\n";
  }
  return status;
}

// --- classify / spectrum -----------------------------------------------------

inline void mu_table(const MuSpectrum& s, std::ostream& out) {
  out << std::setw(4) << "i" << "  " << std::setw(16) << "re" << "  " << std::setw(16) << "im" << "  zero\n";
  for (std::size_t i = 0; i < s.n; ++i) {
    out << std::setw(4) << i << "  " << std::setw(16) << fixed(s.values[i].real()) << "  " << std::setw(16)
        << fixed(s.values[i].imag()) << "  " << (s.zero_flags[i] ? "yes" : "no") << "\n";
  }
}

inline Status classify(const std::string& alpha_text, const GlobalOptions& g, std::ostream& out) {
  const AlphaVector alpha = parse_alpha(alpha_text);
  const CirculantClassification c = classify_circulant(alpha, g.tolerance);
  if (g.json()) {
    out << io::spectrum_report(c).dump(2) << "\n";
    return Status::pass;
  }
  out << "alpha = (" << join(alpha.coords) << ")  n = " << alpha.n() << "\n";
  mu_table(c.spectrum, out);
  out << "zero_count   " << c.spectrum.exact_zero_count << "\n";
  out << "m_nonabelian " << c.m_nonabelian << "\n";
  out << "equivalent to " << c.m_nonabelian << " copies of G plus " << c.n_abelian << " abelian copies\n";
  return Status::pass;
}

inline Status spectrum(const std::string& alpha_text, const GlobalOptions& g, std::ostream& out) {
  const AlphaVector alpha = parse_alpha(alpha_text);
  const CirculantClassification c = classify_circulant(alpha, g.tolerance);
  const double deviation = diagonal_pattern_deviation(transform_w(circulant_w(alpha)), c.spectrum.values);
  const Status status = from_bool(deviation < g.tolerance);
  if (g.json()) {
    out << io::spectrum_report(c).dump(2) << "\n";
    return status;
  }
  out << "alpha = (" << join(alpha.coords) << ")  n = " << alpha.n() << "\n";
  mu_table(c.spectrum, out);
  out << "zero_count   " << c.spectrum.exact_zero_count << "  (exact circulant rank " << c.m_nonabelian << ")\n";
  out << "m_nonabelian " << c.m_nonabelian << "\n";
  out << "transformed tensor matches mu_i delta delta: " << (deviation < g.tolerance ? "yes" : "no")
      << " (tolerance " << sci(g.tolerance) << ")\n";
  return status;
}

// --- certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string w_file;
  std::string algebra;
  bool center = false;
  bool filtration = false;
};

inline Status certify(const CertifyArgs& a, const GlobalOptions& g, std::ostream& out) {
  const WTensor w = load_w(a.w_file);
  const StructureConstants c = load_algebra(a.algebra);
  const CertifyReport r = jacobi_certify(w, c, g.check());
  const Status status = from_bool(r.ok());
  const char* kind = r.kind == CertifyReport::Kind::antisymmetry ? "antisymmetry" : "jacobi";

  Json j{{"command", "certify"}, {"status", status_name(status)}, {"n", w.n()}, {"algebra", c.name()},
         {"dim", c.dim()}, {"total_dim", w.n() * c.dim()}};
  j["violation"] = r.violation ? Json{{"kind", kind}, {"detail", violation_json(*r.violation)}} : Json(nullptr);
  std::ostringstream text;
  text << (r.ok() ? "PASS" : "FAIL") << "  bracket of W (n=" << w.n() << ") on " << c.name() << " (dim " << c.dim()
       << ", total " << w.n() * c.dim() << ")";
  if (r.ok()) text << " satisfies antisymmetry and Jacobi\n";
  else
    text << ": " << kind << " fails at basis (" << r.violation->a << "," << r.violation->b << "," << r.violation->c
         << ") component " << r.violation->f << ", residual " << r.violation->residual << "\n";

  if (a.center) {
    const auto basis = center_basis(induced_structure_constants(w, c, g.cap));
    Json cj = Json::array();
    for (const auto& z : basis) {
      Json v = Json::array();
      for (const auto& x : z.coords) v.push_back(x.to_string());
      cj.push_back(v);
    }
    j["center"] = cj;
    text << "center dimension " << basis.size() << "\n";
    for (const auto& z : basis) text << "  [" << join(z.coords) << "]\n";
  }
  if (a.filtration) {
    const SupportReport support = filtration_support_check(w);
    Json fj{{"support", support.ok()},
            {"semisimple_form", semisimple_form_check(w)},
            {"solvable_form", solvable_form_check(w)}};
    text << "filtration support " << (support.ok() ? "ok" : "violated");
    if (support.ok()) {
      const std::size_t k = max_abelian_filtration_ideal(w);
      fj["abelian_ideal_start"] = k;
      text << "; components " << k << ".." << w.n() - 1 << " form an abelian ideal";
    } else {
      fj["first_violation"] = std::vector<std::size_t>(support.violation->begin(), support.violation->end());
      text << " at (i,j,k)=(" << (*support.violation)[0] << "," << (*support.violation)[1] << ","
           << (*support.violation)[2] << ")";
    }
    text << "\nsemisimple form " << (fj["semisimple_form"].get<bool>() ? "yes" : "no") << ", solvable form "
         << (fj["solvable_form"].get<bool>() ? "yes" : "no") << "\n";
    j["filtration"] = fj;
  }
  out << (g.json() ? j.dump(2) + "\n" : text.str());
  return status;
}

// --- center ------------------------------------------------------------------

inline Status center(const std::string& algebra, const GlobalOptions& g, std::ostream& out) {
  const StructureConstants c = load_algebra(algebra);
  lieext::detail::require(validate_structure_constants(c, g.check()).ok(), "center: '" + algebra + "' is not a Lie algebra");
  const auto basis = center_basis(c);
  if (g.json()) {
    Json cj = Json::array();
    for (const auto& z : basis) {
      Json v = Json::array();
      for (const auto& x : z.coords) v.push_back(x.to_string());
      cj.push_back(v);
    }
    out << Json{{"command", "center"}, {"status", "pass"}, {"algebra", c.name()}, {"dim", c.dim()}, {"center", cj}}.dump(2)
        << "\n";
  } else {
    out << "center of " << c.name() << " (dim " << c.dim() << "): dimension " << basis.size() << "\n";
    for (const auto& z : basis) out << "  [" << join(z.coords) << "]\n";
  }
  return Status::pass;
}

// --- compat ------------------------------------------------------------------

inline Status compat(const std::string& first, const std::string& second, const GlobalOptions& g, std::ostream& out,
                     std::ostream& err) {
  const BracketPair pair(load_algebra(first), load_algebra(second));
  const CompatibilityReport r = compatibility_check(pair, g.check());
  if (r.status == Compatibility::first_not_lie || r.status == Compatibility::second_not_lie) {
    err << "error: precondition violated: " << to_string(r.status) << "\n";
    return Status::input_error;
  }
  const Status status = from_bool(r.ok());
  if (g.json()) {
    Json j{{"command", "compat"}, {"status", status_name(status)}, {"first", pair.first.name()},
           {"second", pair.second.name()}, {"dim", pair.first.dim()}};
    j["violation"] = r.violation ? violation_json(*r.violation) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else if (r.ok()) {
    out << "PASS  " << pair.first.name() << " and " << pair.second.name()
        << " are compatible: every lambda*L1 + mu*L2 is a Lie bracket\n";
  } else {
    const auto& v = *r.violation;
    out << "FAIL  mixed Jacobi identity fails at basis (" << v.a << "," << v.b << "," << v.c << ") component " << v.f
        << ", residual " << v.residual << "\n";
  }
  return status;
}

// --- sandwich-check ----------------------------------------------------------

struct SandwichArgs {
  std::size_t n = 2;
  std::size_t p = 2;
  std::size_t trials = 20;
};

/// Small random rationals from a seeded engine; no std distributions so the
/// stream is identical on every standard library.
class RationalSource {
public:
  explicit RationalSource(std::uint64_t seed) : engine_(seed) {}
  Rational next() {
    const auto num = static_cast<std::int64_t>(engine_() % 11) - 5;
    const auto den = static_cast<std::int64_t>(engine_() % 4) + 1;
    return {num, den};
  }
  RationalMatrix matrix(std::size_t p) {
    RationalMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) m(i, j) = next();
    return m;
  }
  RationalMatrix antisymmetric(std::size_t p) {
    RationalMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        m(i, j) = next();
        m(j, i) = -m(i, j);
      }
    return m;
  }
  RationalMatrix symmetric(std::size_t p) {
    RationalMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i; j < p; ++j) m(i, j) = m(j, i) = next();
    return m;
  }
  template <typename Make>
  BlockVector blocks(std::size_t n, Make make) {
    std::vector<RationalMatrix> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(make());
    return BlockVector(std::move(b));
  }

private:
  std::mt19937_64 engine_;
};

inline Status sandwich_check(const SandwichArgs& a, const GlobalOptions& g, std::ostream& out) {
  lieext::detail::require(a.n >= 1 && a.p >= 1, "sandwich-check needs --n >= 1 and --p >= 1");
  lieext::detail::require(a.trials >= 1, "sandwich-check needs --trials >= 1");
  RationalSource rng(g.seed);
  std::size_t closure = 0, agreement = 0, so_sym = 0, coboundary = 0, scalar = 0;
  std::size_t so_sym_trials = 0, scalar_trials = 0;
  const StructureConstants so_p = a.p >= 2 ? algebras::so(a.p) : StructureConstants(1);
  for (std::size_t t = 0; t < a.trials; ++t) {
    const BlockVector x = rng.blocks(a.n, [&] { return rng.matrix(a.p); });
    const BlockVector y = rng.blocks(a.n, [&] { return rng.matrix(a.p); });
    const BlockVector w = rng.blocks(a.n, [&] { return rng.matrix(a.p); });
    const RationalMatrix product = embed_circulant(x) * embed_circulant(w) * embed_circulant(y);
    closure += has_circulant_pattern(product, a.n, a.p) ? 1 : 0;
    agreement += component_bracket(x, y, w) == bracket_sandwich(x, y, w) ? 1 : 0;
    coboundary += coboundary_identity_check(w, {{x, y}}).ok() ? 1 : 0;
    if (a.p >= 2) {
      ++so_sym_trials;
      const BlockVector xs = rng.blocks(a.n, [&] { return rng.antisymmetric(a.p); });
      const BlockVector ys = rng.blocks(a.n, [&] { return rng.antisymmetric(a.p); });
      const BlockVector as = rng.blocks(a.n, [&] { return rng.symmetric(a.p); });
      const BlockVector z = component_bracket(xs, ys, as);
      so_sym += std::all_of(z.blocks.begin(), z.blocks.end(), [](const auto& m) { return is_antisymmetric(m); }) ? 1 : 0;

      ++scalar_trials;
      AlphaVector alpha;
      for (std::size_t i = 0; i < a.n; ++i) alpha.coords.push_back(rng.next());
      const BlockVector lhs = component_bracket(xs, ys, BlockVector::scalar_pattern(alpha, a.p));
      const GnElement rhs = extension_bracket(circulant_w(alpha), so_p, so_blocks_to_gn(xs), so_blocks_to_gn(ys));
      scalar += so_blocks_to_gn(lhs) == rhs ? 1 : 0;
    }
  }
  struct Line {
    const char* name;
    std::size_t passed, total;
  };
  const std::vector<Line> lines{{"closure", closure, a.trials},
                                {"bracket_agreement", agreement, a.trials},
                                {"coboundary_identity", coboundary, a.trials},
                                {"so_sym_closure", so_sym, so_sym_trials},
                                {"scalar_specialization", scalar, scalar_trials}};
  bool ok = true;
  for (const auto& l : lines) ok = ok && l.passed == l.total;
  const Status status = from_bool(ok);
  if (g.json()) {
    Json checks = Json::object();
    for (const auto& l : lines) checks[l.name] = Json{{"passed", l.passed}, {"trials", l.total}};
    out << Json{{"command", "sandwich-check"}, {"status", status_name(status)}, {"n", a.n}, {"p", a.p},
                {"seed", g.seed}, {"checks", checks}}
               .dump(2)
        << "\n";
  } else {
    out << "sandwich-check n=" << a.n << " p=" << a.p << " trials=" << a.trials << " seed=" << g.seed << "\n";
    for (const auto& l : lines)
      out << (l.passed == l.total ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << l.name << std::right
          << l.passed << "/" << l.total << "\n";
  }
  return status;
}

// --- poisson-bracket ---------------------------------------------------------

inline Status poisson_bracket(const std::string& algebra, const std::string& f_path, const std::string& g_path,
                              const GlobalOptions& g, std::ostream& out) {
  const PoissonTensor t{load_algebra(algebra)};
  const PolyFunction f = io::poly_from_json(io::parse_json(io::read_file(f_path), f_path));
  const PolyFunction h = io::poly_from_json(io::parse_json(io::read_file(g_path), g_path));
  const PolyFunction r = lie_poisson_bracket(t, f, h);
  if (g.json()) out << io::to_json(r).dump(2) << "\n";
  else out << "{f, g} = " << render(r) << "\n";
  return Status::pass;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of W-tensor Lie brackets on G^n", "lieext"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", g.tolerance, "Zero tolerance for complex magnitudes");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--cap", g.cap, "Largest n*dim accepted by brute-force checks");
  app.add_option("--threads", g.threads, "Worker threads for brute-force checks")->check(CLI::Range(1, 256));

  detail::MakeWArgs make;
  auto* make_cmd = app.add_subcommand("make-w", "Write a W-tensor file for a built-in family");
  make_cmd->add_option("kind", make.kind, "direct-sum | circulant | leibnitz | leibnitz-deform | truncate")->required();
  make_cmd->add_option("--n", make.n, "Number of copies");
  make_cmd->add_option("--alpha", make.alpha, "Comma-separated rationals");
  make_cmd->add_option("--lambda", make.lambda, "Deformation parameter");
  make_cmd->add_option("--input", make.input, "W-tensor file to truncate");
  make_cmd->add_option("--output,-o", make.output, "Output file (default stdout)");

  std::string w_path;
  auto* validate_cmd = app.add_subcommand("validate-w", "Check a W-tensor file");
  validate_cmd->add_option("file", w_path, "W-tensor file")->required();

  std::string alpha;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a circulant structure");
  classify_cmd->add_option("--alpha", alpha, "Comma-separated rationals")->required();
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum and DFT diagonalization of a circulant structure");
  spectrum_cmd->add_option("--alpha", alpha, "Comma-separated rationals")->required();

  detail::CertifyArgs cert;
  auto* certify_cmd = app.add_subcommand("certify", "Brute-force Jacobi certification of a W-tensor on an algebra");
  certify_cmd->add_option("file", cert.w_file, "W-tensor file")->required();
  certify_cmd->add_option("--algebra", cert.algebra, "Built-in name or structure-constants file")->required();
  certify_cmd->add_flag("--center", cert.center, "Also compute the center of G^n_W");
  certify_cmd->add_flag("--filtration", cert.filtration, "Also run filtration and form checks");

  std::string algebra;
  auto* center_cmd = app.add_subcommand("center", "Basis of the center of an algebra");
  center_cmd->add_option("algebra", algebra, "Built-in name or structure-constants file")->required();

  std::string first, second;
  auto* compat_cmd = app.add_subcommand("compat", "Compatibility of two Lie brackets");
  compat_cmd->add_option("first", first, "Built-in name or structure-constants file")->required();
  compat_cmd->add_option("second", second, "Built-in name or structure-constants file")->required();

  detail::SandwichArgs sandwich;
  auto* sandwich_cmd = app.add_subcommand("sandwich-check", "Randomized checks of the block-circulant sandwich bracket");
  sandwich_cmd->add_option("--n", sandwich.n, "Number of blocks");
  sandwich_cmd->add_option("--p", sandwich.p, "Block size");
  sandwich_cmd->add_option("--trials", sandwich.trials, "Number of random trials");

  std::string f_path, g_path;
  auto* poisson_cmd = app.add_subcommand("poisson-bracket", "Lie-Poisson bracket of two polynomial files");
  poisson_cmd->add_option("--algebra", algebra, "Built-in name or structure-constants file")->required();
  poisson_cmd->add_option("f", f_path, "Polynomial file")->required();
  poisson_cmd->add_option("g", g_path, "Polynomial file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(Status::input_error);
  }

  try {
    Status s = Status::pass;
    if (*make_cmd) s = detail::make_w(make, g, out);
    else if (*validate_cmd) s = detail::validate_w(w_path, g, out);
    else if (*classify_cmd) s = detail::classify(alpha, g, out);
    else if (*spectrum_cmd) s = detail::spectrum(alpha, g, out);
    else if (*certify_cmd) s = detail::certify(cert, g, out);
    else if (*center_cmd) s = detail::center(algebra, g, out);
    else if (*compat_cmd) s = detail::compat(first, second, g, out, err);
    else if (*sandwich_cmd) s = detail::sandwich_check(sandwich, g, out);
    else if (*poisson_cmd) s = detail::poisson_bracket(algebra, f_path, g_path, g, out);
    return static_cast<int>(s);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Status::input_error);
  } catch (const SpectralMismatch& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Status::input_error);
  }
}

}  // namespace lieext::cli
