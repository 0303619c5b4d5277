#include "kgroth/cli.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kgroth/grothendieck.hpp"
#include "kgroth/thom.hpp"
#include "kgroth/verify.hpp"

namespace kgroth {

namespace {

// Argument combinations that parse but violate the command contract.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ensure_newline(std::string text) {
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  return text;
}

std::string csv_of(const IntegerSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i]);
  }
  return out;
}

IntegerSequence parse_csv(const std::string& text, const std::string& option) {
  try {
    return parse_sequence(text);
  } catch (const Error& e) {
    throw UsageError(option + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Renderers. Every renderer returns the complete output, newline terminated,
// so cached bytes coincide with fresh ones.

std::string json_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// Factors in the canonical display order: positive exponents first, then the
// rest, each group in stored variable order. Matches the text renderer.
std::vector<VarExp> display_factors(const Monomial& mono) {
  std::vector<VarExp> ordered;
  ordered.reserve(mono.factors.size());
  for (int pass = 0; pass < 2; ++pass) {
    for (const VarExp& f : mono.factors) {
      if ((pass == 0) == (f.exp > 0)) ordered.push_back(f);
    }
  }
  return ordered;
}

std::string laurent_to_json(const LaurentPolynomial& p) {
  std::ostringstream out;
  out << "[";
  bool first_term = true;
  for (const Term& t : p.terms()) {
    if (!first_term) out << ",";
    first_term = false;
    out << "{\"monomial\":[";
    bool first_factor = true;
    for (const VarExp& f : display_factors(t.mono)) {
      if (!first_factor) out << ",";
      first_factor = false;
      out << "[\"" << json_escape(var_name(var_of_id(f.id))) << "\"," << f.exp << "]";
    }
    out << "],\"coeff\":\"" << json_escape(to_string(t.coeff)) << "\"}";
  }
  out << "]";
  return ensure_newline(out.str());
}

std::string latex_variable(const Variable& v) {
  std::string base;
  switch (v.family) {
    case VarFamily::alpha: base = "\\alpha"; break;
    case VarFamily::beta: base = "\\beta"; break;
    case VarFamily::epsilon: base = "\\varepsilon"; break;
    case VarFamily::z: base = "z"; break;
    case VarFamily::omega: base = "\\omega"; break;
    case VarFamily::sigma: base = "\\sigma"; break;
    case VarFamily::tau: base = "u"; break;
    case VarFamily::t: base = "t"; break;
    case VarFamily::x: base = "x"; break;
    case VarFamily::abar: base = "\\bar\\alpha"; break;
    case VarFamily::bbar: base = "\\bar\\beta"; break;
  }
  return base + "_{" + std::to_string(v.index) + "}";
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string laurent_to_latex(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0\n";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (mag != 1 || t.mono.factors.empty()) body = latex_rational(mag);
    for (const VarExp& f : display_factors(t.mono)) {
      if (!body.empty()) body += " ";
      body += latex_variable(var_of_id(f.id));
      if (f.exp != 1) body += "^{" + std::to_string(f.exp) + "}";
    }
    out += body;
  }
  return ensure_newline(out);
}

std::string table_to_latex(const CoeffTable& table) {
  const auto& entries = table.entries();
  if (entries.empty()) return "(empty table)\n";
  std::ostringstream out;
  if (table.arity() == 3) {
    for (const auto& [key, value] : entries) {
      out << "d_{" << key[0] << "," << key[1] << "," << key[2]
          << "} = " << value.get_num().get_str() << " \\\\\n";
    }
    return out.str();
  }
  int r_lo = entries.begin()->first[0], r_hi = r_lo;
  int s_lo = entries.begin()->first[1], s_hi = s_lo;
  for (const auto& [key, value] : entries) {
    (void)value;
    r_lo = std::min(r_lo, key[0]);
    r_hi = std::max(r_hi, key[0]);
    s_lo = std::min(s_lo, key[1]);
    s_hi = std::max(s_hi, key[1]);
  }
  out << "\\begin{array}{r|" << std::string(static_cast<std::size_t>(r_hi - r_lo + 1), 'r')
      << "}\n";
  for (int r = r_lo; r <= r_hi; ++r) out << " & x_1^{" << r << "}";
  out << " \\\\\\hline\n";
  for (int s = s_hi; s >= s_lo; --s) {
    out << "x_2^{" << s << "}";
    for (int r = r_lo; r <= r_hi; ++r) {
      Rational v = table.value_at({r, s});
      out << " & " << (v == 0 ? std::string() : v.get_num().get_str());
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

std::string render_poly(const LaurentPolynomial& p, const std::string& format) {
  if (format == "json") return laurent_to_json(p);
  if (format == "latex") return laurent_to_latex(p);
  return ensure_newline(p.to_string());
}

std::string render_expansion(const GExpansion& e, const std::string& format) {
  if (format == "json") return ensure_newline(e.to_json());
  if (format == "latex") return ensure_newline(e.to_latex());
  return ensure_newline(e.to_text());
}

std::string render_table(const CoeffTable& t, const std::string& format) {
  if (format == "json") return ensure_newline(t.to_json());
  if (format == "latex") return table_to_latex(t);
  return ensure_newline(t.to_text());
}

// ---------------------------------------------------------------------------
// Cache: one file per canonical request, written atomically. Any read or
// write problem silently falls back to fresh computation; caching is an
// optimization, never a correctness requirement.

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_file(const std::string& dir, const std::string& canonical) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));
  return std::filesystem::path(dir) / (std::string(kVersionTag) + "-" + hex + ".txt");
}

std::optional<std::string> read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

void write_cache(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << text;
    if (!out.good()) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

int run_cached(const std::string& canonical, const std::function<std::string()>& compute,
               std::ostream& out) {
  const char* dir = std::getenv("KGROTH_CACHE");
  if (dir != nullptr && *dir != '\0') {
    std::filesystem::path path = cache_file(dir, canonical);
    if (std::optional<std::string> cached = read_cache(path)) {
      out << *cached;
      return 0;
    }
    std::string text = compute();
    write_cache(path, text);
    out << text;
    return 0;
  }
  out << compute();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact iterated-residue computations with stable Grothendieck polynomials"};
  app.name("kgroth");
  app.require_subcommand(1);

  static const std::vector<std::string> kFormats = {"text", "json", "latex"};
  auto add_format = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "output format")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
  };

  // groth: one double Grothendieck polynomial.
  std::string groth_perm, groth_partition, groth_format = "text";
  int groth_k = 0, groth_l = 0;
  CLI::App* groth = app.add_subcommand(
      "groth", "render a double stable Grothendieck polynomial");
  CLI::Option* perm_opt =
      groth->add_option("--perm", groth_perm, "permutation in one-line digits, e.g. 132");
  CLI::Option* partition_opt = groth->add_option(
      "--partition", groth_partition, "partition as comma-separated parts, e.g. 2,1");
  CLI::Option* groth_k_opt = groth->add_option("--k", groth_k, "number of alpha variables")
                                 ->check(CLI::NonNegativeNumber);
  CLI::Option* groth_l_opt = groth->add_option("--l", groth_l, "number of beta variables")
                                 ->check(CLI::NonNegativeNumber);
  add_format(groth, groth_format);

  // straighten: rewrite an arbitrary index into the partition basis.
  std::string straighten_seq, straighten_format = "text";
  CLI::App* straighten_cmd = app.add_subcommand(
      "straighten", "rewrite G of an integer sequence as a partition combination");
  straighten_cmd->add_option("--seq", straighten_seq, "comma-separated integers, e.g. 3,-1,2")
      ->required();
  add_format(straighten_cmd, straighten_format);

  // product: structure constants.
  std::string product_left, product_right, product_format = "text";
  int product_k = 0, product_l = 0;
  CLI::App* product = app.add_subcommand(
      "product", "expand a product of two G polynomials in the G basis");
  product->add_option("--left", product_left, "left index, comma separated")->required();
  product->add_option("--right", product_right, "right index, comma separated")->required();
  product->add_option("--k", product_k, "number of alpha variables")
      ->required()
      ->check(CLI::NonNegativeNumber);
  product->add_option("--l", product_l, "number of beta variables")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_format(product, product_format);

  // ktp: Thom classes of the three singularity families.
  CLI::App* ktp = app.add_subcommand("ktp", "K-theoretic Thom classes");
  ktp->require_subcommand(1);
  struct KtpArgs {
    int a = 0;
    int b = 0;
    int r = 0;
    int n = 0;
    std::string expand;
    std::string format = "text";
    CLI::Option* n_opt = nullptr;
  };
  KtpArgs a2_args, a3_args, sigma_args;
  auto add_instance = [](CLI::App* sub, KtpArgs& args) {
    sub->add_option("--a", args.a, "source dimension")->required();
    sub->add_option("--b", args.b, "target dimension")->required();
  };
  CLI::App* ktp_a2_cmd = ktp->add_subcommand("a2", "second-order contact singularity class");
  add_instance(ktp_a2_cmd, a2_args);
  ktp_a2_cmd->add_option("--expand", a2_args.expand, "G-basis series form")
      ->check(CLI::IsMember({"stable", "minimal"}));
  a2_args.n_opt =
      ktp_a2_cmd->add_option("--N", a2_args.n, "truncation order for --expand stable");
  add_format(ktp_a2_cmd, a2_args.format);
  CLI::App* ktp_a3_cmd = ktp->add_subcommand("a3", "third-order contact singularity class");
  add_instance(ktp_a3_cmd, a3_args);
  add_format(ktp_a3_cmd, a3_args.format);
  CLI::App* ktp_sigma_cmd =
      ktp->add_subcommand("sigma", "kernel-rank-drop locus class");
  ktp_sigma_cmd->add_option("--r", sigma_args.r, "rank drop")->required();
  add_instance(ktp_sigma_cmd, sigma_args);
  add_format(ktp_sigma_cmd, sigma_args.format);

  // coeff: the expansion coefficient tables.
  CLI::App* coeff = app.add_subcommand("coeff", "expansion coefficient tables");
  coeff->require_subcommand(1);
  int coeff_rmax = 0, coeff_l = 0;
  std::string coeff_format = "text";
  CLI::App* coeff_d = coeff->add_subcommand("d", "two-index series coefficients");
  CLI::App* coeff_dd = coeff->add_subcommand("D", "collapsed minimal-form coefficients");
  CLI::App* coeff_d3 = coeff->add_subcommand("d3", "three-index series coefficients");
  for (CLI::App* sub : {coeff_d, coeff_dd, coeff_d3}) {
    sub->add_option("--rmax", coeff_rmax, "largest row index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(sub, coeff_format);
  }
  coeff_dd->add_option("--l", coeff_l, "relative dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // verify: the acceptance checks.
  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run the identity-check suites");
  verify->add_option("suite", verify_suite, "fast or full")
      ->required()
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      VerifySuite suite = verify_suite == "fast" ? VerifySuite::fast : VerifySuite::full;
      std::vector<CheckResult> results =
          run_verification(suite, {}, [&out](const CheckResult& r) {
            out << format_check_line(r) << "\n";
            out.flush();
          });
      std::size_t passed = 0;
      for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
      out << passed << "/" << results.size() << " checks passed\n";
      return all_passed(results) ? 0 : 1;
    }

    std::string canonical;
    std::function<std::string()> compute;

    if (app.got_subcommand(groth)) {
      bool has_perm = perm_opt->count() > 0;
      bool has_partition = partition_opt->count() > 0;
      if (has_perm == has_partition) {
        throw UsageError("groth needs exactly one of --perm or --partition");
      }
      bool has_k = groth_k_opt->count() > 0;
      bool has_l = groth_l_opt->count() > 0;
      if (has_k != has_l) throw UsageError("groth needs --k and --l together");
      if (has_partition && !has_k) {
        throw UsageError("groth --partition needs --k and --l");
      }
      std::string sizes = (has_k ? "k=" + std::to_string(groth_k) : "k=") + "|" +
                          (has_l ? "l=" + std::to_string(groth_l) : "l=");
      if (has_perm) {
        std::optional<Permutation> parsed;
        try {
          parsed.emplace(Permutation::from_string(groth_perm));
        } catch (const Error& e) {
          throw UsageError(std::string("--perm: ") + e.what());
        }
        const Permutation& w = *parsed;
        canonical = "cmd=groth|perm=" + groth_perm + "|" + sizes + "|fmt=" + groth_format;
        std::string format = groth_format;
        if (has_k) {
          int k = groth_k, l = groth_l;
          compute = [w, k, l, format] {
            auto poly = truncated_stable(w, k, l).as_polynomial();
            if (!poly.has_value()) {
              throw Error("groth: internal-consistency failure, value is not a polynomial");
            }
            return render_poly(*poly, format);
          };
        } else {
          compute = [w, format] {
            auto poly = groth_recursive(w).as_polynomial();
            if (!poly.has_value()) {
              throw Error("groth: internal-consistency failure, value is not a polynomial");
            }
            return render_poly(*poly, format);
          };
        }
      } else {
        IntegerSequence lambda = parse_csv(groth_partition, "--partition");
        if (!is_partition(lambda)) {
          throw UsageError("--partition must be weakly decreasing and positive; "
                           "use straighten for general sequences");
        }
        canonical =
            "cmd=groth|partition=" + csv_of(lambda) + "|" + sizes + "|fmt=" + groth_format;
        int k = groth_k, l = groth_l;
        std::string format = groth_format;
        compute = [lambda, k, l, format] { return render_poly(g_residue(lambda, k, l), format); };
      }
    } else if (app.got_subcommand(straighten_cmd)) {
      IntegerSequence seq = parse_csv(straighten_seq, "--seq");
      canonical = "cmd=straighten|seq=" + csv_of(seq) + "|fmt=" + straighten_format;
      std::string format = straighten_format;
      compute = [seq, format] { return render_expansion(straighten(seq), format); };
    } else if (app.got_subcommand(product)) {
      IntegerSequence left = parse_csv(product_left, "--left");
      IntegerSequence right = parse_csv(product_right, "--right");
      canonical = "cmd=product|left=" + csv_of(left) + "|right=" + csv_of(right) +
                  "|k=" + std::to_string(product_k) + "|l=" + std::to_string(product_l) +
                  "|fmt=" + product_format;
      int k = product_k, l = product_l;
      std::string format = product_format;
      compute = [left, right, k, l, format] {
        // Box bounds: a product of straightened partitions never needs more
        // rows than the two supports combined, nor a longer first row than
        // the two first rows combined.
        int rows = 0, cols = 0;
        for (const IntegerSequence* side : {&left, &right}) {
          GExpansion straightened_side = straighten(*side);
          int side_rows = 0, side_cols = 0;
          for (const auto& [key, coeff] : straightened_side.entries()) {
            (void)coeff;
            side_rows = std::max(side_rows, static_cast<int>(key.size()));
            if (!key.empty()) side_cols = std::max(side_cols, key[0]);
          }
          rows += side_rows;
          cols += side_cols;
        }
        rows = std::max(rows, 1);
        cols = std::max(cols, 1);
        return render_expansion(multiply_G(left, right, k, l, rows, cols), format);
      };
    } else if (app.got_subcommand(ktp)) {
      if (ktp->got_subcommand(ktp_a2_cmd)) {
        const KtpArgs& args = a2_args;
        bool has_n = args.n_opt->count() > 0;
        if (!args.expand.empty() && args.expand == "stable" && !has_n) {
          throw UsageError("ktp a2 --expand stable needs --N");
        }
        if (has_n && args.expand != "stable") {
          throw UsageError("--N applies only to --expand stable");
        }
        canonical = "cmd=ktp|kind=a2|a=" + std::to_string(args.a) +
                    "|b=" + std::to_string(args.b) + "|expand=" + args.expand +
                    "|N=" + (has_n ? std::to_string(args.n) : "") + "|fmt=" + args.format;
        KtpArgs copy = args;
        compute = [copy] {
          ThomInstance inst(copy.a, copy.b);
          if (copy.expand == "minimal") {
            return render_expansion(ktp_a2_minimal(inst.l()), copy.format);
          }
          if (copy.expand == "stable") {
            return render_expansion(ktp_a2_stable(inst.l(), copy.n), copy.format);
          }
          return render_poly(ktp_a2(inst), copy.format);
        };
      } else if (ktp->got_subcommand(ktp_a3_cmd)) {
        canonical = "cmd=ktp|kind=a3|a=" + std::to_string(a3_args.a) +
                    "|b=" + std::to_string(a3_args.b) + "|fmt=" + a3_args.format;
        KtpArgs copy = a3_args;
        compute = [copy] { return render_poly(ktp_a3(ThomInstance(copy.a, copy.b)), copy.format); };
      } else {
        canonical = "cmd=ktp|kind=sigma|r=" + std::to_string(sigma_args.r) +
                    "|a=" + std::to_string(sigma_args.a) + "|b=" + std::to_string(sigma_args.b) +
                    "|fmt=" + sigma_args.format;
        KtpArgs copy = sigma_args;
        compute = [copy] {
          return render_poly(ktp_sigma_r(copy.r, ThomInstance(copy.a, copy.b)), copy.format);
        };
      }
    } else if (app.got_subcommand(coeff)) {
      std::string format = coeff_format;
      int rmax = coeff_rmax;
      if (coeff->got_subcommand(coeff_d)) {
        canonical = "cmd=coeff|kind=d|rmax=" + std::to_string(rmax) + "|fmt=" + format;
        compute = [rmax, format] {
          CoeffTable table(2);
          for (int r = 0; r <= rmax; ++r) {
            for (int s = -r - 1; s <= -1; ++s) table.set({r, s}, Rational(d_coeff(r, s)));
          }
          return render_table(table, format);
        };
      } else if (coeff->got_subcommand(coeff_dd)) {
        int l = coeff_l;
        canonical = "cmd=coeff|kind=D|l=" + std::to_string(l) +
                    "|rmax=" + std::to_string(rmax) + "|fmt=" + format;
        compute = [rmax, l, format] {
          CoeffTable table(2);
          for (int r = 0; r <= std::min(rmax, 2 * l + 2); ++r) {
            for (int s = -l - 2; s <= -((r + 1) / 2); ++s) {
              table.set({r, s}, Rational(D_coeff(r, s, l)));
            }
          }
          return render_table(table, format);
        };
      } else {
        canonical = "cmd=coeff|kind=d3|rmax=" + std::to_string(rmax) + "|fmt=" + format;
        compute = [rmax, format] {
          // Window covering every entry that marginalizes onto the two-index
          // table: the rows with s > 0 sum to zero over t and are omitted.
          return render_table(d3_table(rmax, -rmax - 1, 0, -2 * rmax - 3, -2), format);
        };
      }
    } else {
      throw UsageError("no command selected");
    }

    return run_cached(canonical, compute, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("kgroth");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kgroth
