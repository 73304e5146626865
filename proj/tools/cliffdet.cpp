// cliffdet: determinants, characteristic polynomials and inverses in G(p,q).
//
// Exit codes: 0 success, 1 other failure, 2 usage or parse error,
// 3 not invertible, 4 not generic, 5 methods disagree.

#include "cliffdet/errors.hpp"
#include "cliffdet/expr.hpp"
#include "cliffdet/formula_json.hpp"
#include "cliffdet/kernels.hpp"
#include "cliffdet/matrix_oracle.hpp"
#include "cliffdet/methods.hpp"
#include "cliffdet/vieta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cliffdet;
using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kNotInvertible = 3, kNotGeneric = 4, kInconsistent = 5 };

struct Options {
  std::string sig;
  std::string backend = "rational";
  std::string method;
  std::string format = "text";
  std::string expr;
  std::uint64_t seed = 0;
  int trials = 100;
};

Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--sig expects p,q");
  std::size_t used_p = 0, used_q = 0;
  const std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
  int p = 0, q = 0;
  try {
    p = std::stoi(ps, &used_p);
    q = std::stoi(qs, &used_q);
  } catch (const std::exception&) {
    throw std::invalid_argument("--sig expects p,q");
  }
  if (used_p != ps.size() || used_q != qs.size()) throw std::invalid_argument("--sig expects p,q");
  return Signature(p, q);
}

bool json_output(const Options& o) { return o.format == "json"; }

json value_json(const Rational& x) { return x.get_str(); }
json value_json(double x) { return x; }

std::string value_text(const Rational& x) { return x.get_str(); }
std::string value_text(double x) { return FieldTraits<double>::to_string(x); }

template <class F>
json coefficients_json(std::span<const F> cs) {
  json arr = json::array();
  for (const F& c : cs) arr.push_back(value_json(c));
  return arr;
}

template <class F>
std::string coefficients_text(std::span<const F> cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + value_text(cs[i]);
  return s + "]";
}

json signature_json(const Signature& sig) { return {{"p", sig.p()}, {"q", sig.q()}}; }

template <class J>
void print_json(const J& j) { std::cout << j.dump(2) << "\n"; }

// --- det / charpoly -------------------------------------------------------

template <class F>
int cmd_poly(const Options& o, const Signature& sig, bool det_only) {
  const Multivector<F> u = parse_multivector<F>(sig, o.expr);
  const std::string method = o.method.empty() ? "fl" : o.method;
  json out = {{"signature", signature_json(sig)}, {"input", format_multivector(u)}, {"method", method}};

  if (method != "all") {
    const Method m = parse_method(method);
    const CharPoly<F> p = characteristic_polynomial(u, m);
    const F det = det_only ? determinant(u, m) : p.determinant();
    if (json_output(o)) {
      out["coefficients"] = coefficients_json<F>(p.coefficients());
      out["det"] = value_json(det);
      print_json(out);
    } else if (det_only) {
      std::cout << value_text(det) << "\n";
    } else {
      std::cout << "C = " << coefficients_text<F>(p.coefficients()) << "\n";
      std::cout << "det = " << value_text(det) << "\n";
    }
    return kOk;
  }

  const CrossCheck<F> cc = cross_check(u);
  const MethodResult<F>& ref = cc.results.front();
  if (json_output(o)) {
    json results = json::array();
    for (const MethodResult<F>& r : cc.results) {
      json jr = {{"method", std::string(method_name(r.method))}};
      if (r.coefficients.empty()) {
        jr["error"] = r.error;
      } else {
        jr["coefficients"] = coefficients_json<F>(r.coefficients);
        jr["det"] = value_json(F(-r.coefficients.back()));
      }
      results.push_back(jr);
    }
    if (!ref.coefficients.empty()) {
      out["coefficients"] = coefficients_json<F>(ref.coefficients);
      out["det"] = value_json(F(-ref.coefficients.back()));
    }
    out["consistent"] = cc.consistent;
    out["results"] = results;
    print_json(out);
  } else {
    for (const MethodResult<F>& r : cc.results) {
      std::cout << method_name(r.method) << ": ";
      if (r.coefficients.empty()) std::cout << "error: " << r.error << "\n";
      else if (det_only) std::cout << value_text(F(-r.coefficients.back())) << "\n";
      else std::cout << "C = " << coefficients_text<F>(r.coefficients) << "\n";
    }
    std::cout << "consistent: " << (cc.consistent ? "true" : "false") << "\n";
    if (!cc.consistent) std::cerr << "cliffdet: " << cc.detail << "\n";
  }
  return cc.consistent ? kOk : kInconsistent;
}

// --- inverse --------------------------------------------------------------

template <class F>
int cmd_inverse(const Options& o, const Signature& sig) {
  const Multivector<F> u = parse_multivector<F>(sig, o.expr);
  const Method m = parse_method(o.method.empty() ? "fl" : o.method);
  const Multivector<F> adj = adjugate_by(u, m);
  const F det = determinant(u, m);
  json out = {{"signature", signature_json(sig)},
              {"input", format_multivector(u)},
              {"method", std::string(method_name(m))},
              {"coefficients", coefficients_json<F>(characteristic_polynomial(u, m).coefficients())},
              {"det", value_json(det)},
              {"adjugate", format_multivector(adj)}};
  const bool singular = FieldTraits<F>::is_zero(det);
  if (!singular) {
    Multivector<F> inv = adj;
    inv *= F(F(1) / det);
    out["inverse"] = format_multivector(inv);
  }
  if (json_output(o)) {
    print_json(out);
  } else {
    std::cout << "det = " << value_text(det) << "\n";
    std::cout << "adjugate = " << out["adjugate"].get<std::string>() << "\n";
    if (!singular) std::cout << "inverse = " << out["inverse"].get<std::string>() << "\n";
  }
  if (singular) throw NotInvertible(value_text(det));
  return kOk;
}

// --- eigen ----------------------------------------------------------------

std::string complex_text(std::complex<double> z) {
  std::string s = value_text(z.real());
  if (z.imag() != 0) s += (z.imag() < 0 ? " - " : " + ") + value_text(std::fabs(z.imag())) + "i";
  return s;
}

template <class F>
int cmd_eigen(const Options& o, const Signature& sig) {
  const Multivector<F> u = parse_multivector<F>(sig, o.expr);
  Multivector<double> ud(sig);
  if constexpr (FieldTraits<F>::exact) ud = to_double(u);
  else ud = u;
  const std::vector<std::complex<double>> eig = eigenvalues(ud);
  const CharPoly<F> poly = fl_coefficients(u);

  json out = {{"signature", signature_json(sig)},
              {"input", format_multivector(u)},
              {"method", "matrix"},
              {"coefficients", coefficients_json<F>(poly.coefficients())},
              {"det", value_json(poly.determinant())}};
  json jeig = json::array();
  for (auto z : eig) jeig.push_back({z.real(), z.imag()});
  out["eigenvalues"] = jeig;

  int code = kOk;
  std::vector<std::string> ys;
  std::string not_generic;
  if (sig.n() <= 3) {
    try {
      for (const auto& y : gelfand_retakh_ys(u).ys) ys.push_back(format_multivector(y));
    } catch (const NotGeneric& e) {
      not_generic = e.what();
      code = kNotGeneric;
    }
    out["y"] = ys;
  }
  if (json_output(o)) {
    print_json(out);
  } else {
    std::cout << "C = " << coefficients_text<F>(poly.coefficients()) << "\n";
    std::cout << "eigenvalues:";
    for (auto z : eig) std::cout << "\n  " << complex_text(z);
    std::cout << "\n";
    if (!ys.empty()) {
      std::cout << "y:";
      for (const auto& y : ys) std::cout << "\n  " << y;
      std::cout << "\n";
    }
  }
  if (!not_generic.empty()) std::cerr << "cliffdet: " << not_generic << "\n";
  return code;
}

// --- check ----------------------------------------------------------------

template <class F>
int cmd_check(const Options& o, const Signature& sig) {
  if (o.trials < 1) throw std::invalid_argument("--trials must be positive");
  std::mt19937_64 rng(o.seed);
  json failures = json::array();
  for (int t = 0; t < o.trials; ++t) {
    const Multivector<F> u = random_multivector<F>(sig, rng);
    const CrossCheck<F> cc = cross_check(u);
    if (!cc.consistent) failures.push_back({{"trial", t}, {"input", format_multivector(u)}, {"detail", cc.detail}});
  }
  const bool ok = failures.empty();
  if (json_output(o)) {
    print_json(json{{"signature", signature_json(sig)},
                {"method", "all"},
                {"backend", o.backend},
                {"trials", o.trials},
                {"seed", o.seed},
                {"consistent", ok},
                {"failures", failures}});
  } else {
    std::cout << "signature: " << sig.to_string() << "  backend: " << o.backend << "  trials: " << o.trials
              << "  seed: " << o.seed << "\n";
    for (const auto& f : failures)
      std::cout << "trial " << f["trial"].get<int>() << ": " << f["detail"].get<std::string>() << "\n";
    std::cout << "all methods agree: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? kOk : kInconsistent;
}

// --- formulas -------------------------------------------------------------

int cmd_formulas(const Options& o, std::optional<Signature> sig) {
  std::vector<const DetFormula*> list;
  if (sig) {
    list = formulas_for(sig->n());
  } else {
    for (const DetFormula& f : formula_catalog()) list.push_back(&f);
  }
  if (json_output(o)) {
    print_json(catalog_to_json(list));
    return kOk;
  }
  for (const DetFormula* f : list) {
    std::cout << f->name << "  (n = " << f->n << ", " << family_name(f->family) << ", " << f->terms.size()
              << (f->terms.size() == 1 ? " term" : " terms") << ")\n";
    std::cout << "  Det(U) = " << to_string(*f, false) << "\n";
  }
  return kOk;
}

// --- bench ----------------------------------------------------------------

template <class Fn>
double mean_microseconds(int trials, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < trials; ++i) fn(i);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(t1 - t0).count() / trials;
}

template <class F>
int cmd_bench(const Options& o, const Signature& sig) {
  if (o.trials < 1) throw std::invalid_argument("--trials must be positive");
  std::mt19937_64 rng(o.seed);
  std::vector<Multivector<F>> inputs;
  for (int t = 0; t < o.trials; ++t) inputs.push_back(random_multivector<F>(sig, rng));

  std::vector<Method> methods;
  if (o.method.empty() || o.method == "all") methods.assign(all_methods().begin(), all_methods().end());
  else methods.push_back(parse_method(o.method));

  json timings = json::array();
  for (Method m : methods) {
    const double det_us = mean_microseconds(o.trials, [&](int i) { (void)determinant(inputs[i], m); });
    const double poly_us = mean_microseconds(o.trials, [&](int i) { (void)characteristic_polynomial(inputs[i], m); });
    timings.push_back({{"method", std::string(method_name(m))}, {"det_us", det_us}, {"charpoly_us", poly_us}});
  }

  json kernels = json::array();
  if constexpr (!FieldTraits<F>::exact) {
    std::vector<double> out(sig.blade_count());
    for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon}) {
      if (!kernels::isa_available(isa)) continue;
      const int reps = 200;
      const double us = mean_microseconds(o.trials * reps, [&](int i) {
        const auto& a = inputs[static_cast<std::size_t>(i % o.trials)];
        kernels::product_f64(isa, sig, a.coeffs(), a.coeffs(), out);
      });
      kernels.push_back({{"isa", std::string(kernels::isa_name(isa))}, {"product_us", us}});
    }
  }

  if (json_output(o)) {
    print_json(json{{"signature", signature_json(sig)},
                {"backend", o.backend},
                {"trials", o.trials},
                {"seed", o.seed},
                {"timings", timings},
                {"kernels", kernels}});
  } else {
    std::printf("signature %s, backend %s, %d trials\n", sig.to_string().c_str(), o.backend.c_str(), o.trials);
    std::printf("%-16s %14s %14s\n", "method", "det [us]", "charpoly [us]");
    for (const auto& t : timings) {
      std::printf("%-16s %14.1f %14.1f\n", t["method"].get<std::string>().c_str(), t["det_us"].get<double>(),
                  t["charpoly_us"].get<double>());
    }
    for (const auto& k : kernels)
      std::printf("product kernel %-8s %10.3f us\n", k["isa"].get<std::string>().c_str(), k["product_us"].get<double>());
  }
  return kOk;
}

template <class F>
int dispatch(const std::string& cmd, const Options& o, const Signature& sig) {
  if (cmd == "det") return cmd_poly<F>(o, sig, true);
  if (cmd == "charpoly") return cmd_poly<F>(o, sig, false);
  if (cmd == "inverse") return cmd_inverse<F>(o, sig);
  if (cmd == "eigen") return cmd_eigen<F>(o, sig);
  if (cmd == "check") return cmd_check<F>(o, sig);
  if (cmd == "bench") return cmd_bench<F>(o, sig);
  throw std::logic_error("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basis-free determinants, characteristic polynomials and inverses in G(p,q)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_sig) {
    auto* sig = sub->add_option("--sig", o.sig, "signature p,q with 1 <= p+q <= 6");
    if (needs_sig) sig->required();
    sub->add_option("--backend", o.backend, "coefficient field")
        ->check(CLI::IsMember({"rational", "float"}))
        ->capture_default_str();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  auto method_opt = [&](CLI::App* sub, bool allow_all) {
    std::vector<std::string> names;
    for (Method m : all_methods()) names.emplace_back(method_name(m));
    if (allow_all) names.emplace_back("all");
    sub->add_option("--method", o.method, "computation route (default fl)")->check(CLI::IsMember(names));
  };

  auto* det = app.add_subcommand("det", "determinant of a multivector");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic coefficients C_1..C_N");
  auto* inverse = app.add_subcommand("inverse", "adjugate and inverse");
  auto* eigen = app.add_subcommand("eigen", "eigenvalues and, for n <= 3, the elements y_k");
  auto* check = app.add_subcommand("check", "cross-check all methods on random multivectors");
  auto* formulas = app.add_subcommand("formulas", "list the determinant formula catalog");
  auto* bench = app.add_subcommand("bench", "time every method on random multivectors");

  for (auto* sub : {det, charpoly, inverse, eigen}) {
    common(sub, true);
    sub->add_option("expr", o.expr, "multivector, e.g. \"5 + 1/2*e2 + 1/2*e12\"")->required();
  }
  method_opt(det, true);
  method_opt(charpoly, true);
  method_opt(inverse, false);
  for (auto* sub : {check, bench}) {
    common(sub, true);
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", o.trials, "number of random multivectors")->capture_default_str();
  }
  method_opt(bench, true);
  common(formulas, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "formulas") {
      std::optional<Signature> sig;
      if (!o.sig.empty()) sig = parse_signature(o.sig);
      return cmd_formulas(o, sig);
    }
    if (cmd == "inverse" && !o.method.empty() && o.method != "fl" && o.method != "closed-triangle" &&
        o.method != "closed-bar") {
      throw std::invalid_argument("inverse supports --method fl, closed-triangle or closed-bar");
    }
    const Signature sig = parse_signature(o.sig);
    return o.backend == "float" ? dispatch<double>(cmd, o, sig) : dispatch<Rational>(cmd, o, sig);
  } catch (const NotInvertible& e) {
    std::cerr << "cliffdet: " << e.what() << "\n";
    return kNotInvertible;
  } catch (const NotGeneric& e) {
    std::cerr << "cliffdet: " << e.what() << "\n";
    return kNotGeneric;
  } catch (const ConsistencyError& e) {
    std::cerr << "cliffdet: inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ParseError& e) {
    std::cerr << "cliffdet: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cliffdet: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cliffdet: " << e.what() << "\n";
    return kFailure;
  }
}
