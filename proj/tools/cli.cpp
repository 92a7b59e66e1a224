#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latsec/catalog.hpp"
#include "latsec/channel.hpp"
#include "latsec/coding.hpp"
#include "latsec/error.hpp"
#include "latsec/modular.hpp"
#include "latsec/multilevel.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/theta.hpp"

namespace latsec::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON numbers use the shortest round-trip form; non-finite values become null.
ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

struct Range {
  double low = 0.0;
  double high = 0.0;
  double step = 1.0;

  std::vector<double> values() const {
    std::vector<double> out;
    const double span = high - low;
    const auto count = static_cast<long long>(std::floor(span / step + 1e-9));
    for (long long i = 0; i <= count; ++i) out.push_back(low + static_cast<double>(i) * step);
    return out;
  }
};

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number for " + what + ": '" + text + "'");
  }
}

// "low:high[:step]".
Range parse_range(const std::string& text, double default_step, const std::string& what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 3) throw UsageError(what + " must look like low:high[:step]");
  Range r{parse_double(parts[0], what), parse_double(parts[1], what),
          parts.size() == 3 ? parse_double(parts[2], what) : default_step};
  if (!(r.step > 0.0) || r.high < r.low) throw UsageError(what + " needs low <= high and a positive step");
  if ((r.high - r.low) / r.step > 1e6) throw UsageError(what + " has too many points");
  return r;
}

Bits parse_hex_bits(const std::string& hex) {
  Bits out;
  for (char c : hex) {
    int v = 0;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw UsageError(std::string("invalid hex digit '") + c + "'");
    for (int b = 3; b >= 0; --b) out.push_back(static_cast<std::uint8_t>((v >> b) & 1));
  }
  if (out.empty()) throw UsageError("--bits must not be empty");
  return out;
}

std::string bits_to_hex(const Bits& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) v = 2 * v + (i + b < bits.size() ? bits[i + b] : 0);
    out.push_back(digits[v]);
  }
  return out;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double(p, "--point"));
  return out;
}

ChainKind parse_chain(const std::string& s) { return s == "e8" ? ChainKind::e8 : ChainKind::z8; }

struct Common {
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* app, Common& c, const std::string& default_format) {
  c.format = default_format;
  app->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app->add_option("--seed", c.seed, "Seed for every random stream");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot open output file " + c.out_path);
  f << text;
  if (!f) throw Error(ErrorKind::invalid_argument, "failed writing " + c.out_path);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- gain -------------------------------------------------------------------

std::string cmd_gain(const std::string& target, const Common& c) {
  const ThetaEvaluator ev = evaluator_for(target);
  const SecrecyGain g = secrecy_gain(ev);
  if (c.format == "json") {
    ordered_json j;
    j["lattice"] = target;
    j["dimension"] = ev.n;
    j["weak_exact"] = g.weak_exact ? ordered_json(format_rational(*g.weak_exact)) : ordered_json(nullptr);
    j["weak"] = g.weak ? jnum(*g.weak) : ordered_json(nullptr);
    j["y0"] = g.y0 ? jnum(*g.y0) : ordered_json(nullptr);
    j["strong"] = jnum(g.strong.value);
    j["y_star"] = jnum(g.strong.y_star);
    j["y_star_db"] = jnum(10.0 * std::log10(g.strong.y_star));
    j["unimodal"] = g.strong.unimodal;
    j["weak_strong_gap"] = g.weak_strong_gap ? jnum(*g.weak_strong_gap) : ordered_json(nullptr);
    return dump(j);
  }
  std::ostringstream s;
  s << "lattice " << target << "\n";
  if (g.weak_exact) s << "weak " << format_rational(*g.weak_exact) << "\n";
  else if (g.weak) s << "weak " << num(*g.weak) << "\n";
  else s << "weak none\n";
  if (g.weak) s << "weak_value " << num(*g.weak) << "\n";
  if (g.y0) s << "y0 " << num(*g.y0) << "\n";
  s << "strong " << num(g.strong.value) << "\n";
  s << "y_star " << num(g.strong.y_star) << "\n";
  s << "unimodal " << (g.strong.unimodal ? "yes" : "no") << "\n";
  return s.str();
}

// ---- curve ------------------------------------------------------------------

std::string cmd_curve(const std::string& target, const Range& range, const Common& c) {
  const ThetaEvaluator ev = evaluator_for(target);
  const double n = static_cast<double>(ev.n);
  const double lambda2 = std::pow(ev.volume, 2.0 / n);
  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  s << "y_db,xi,theta_lattice,theta_cubic\n";
  for (double db : range.values()) {
    const double y = std::pow(10.0, db / 10.0);
    const double log_cubic = n * std::log(jacobi_thetas_at(lambda2 * y).t3);
    const double log_lat = ev.cubic ? log_cubic : ev.log_theta(y);
    const double xi = std::exp(log_cubic - log_lat);
    if (c.format == "json") {
      rows.push_back({{"y_db", jnum(db)},
                      {"xi", jnum(xi)},
                      {"theta_lattice", jnum(std::exp(log_lat))},
                      {"theta_cubic", jnum(std::exp(log_cubic))}});
    } else {
      s << num(db) << ',' << num(xi) << ',' << num(std::exp(log_lat)) << ',' << num(std::exp(log_cubic)) << "\n";
    }
  }
  if (c.format == "json") return dump(ordered_json{{"lattice", target}, {"rows", rows}});
  return s.str();
}

// ---- extremal ---------------------------------------------------------------

std::string cmd_extremal(unsigned n, const Common& c) {
  const ThetaPolynomial p = extremal_theta(n);
  const KissingData k = kissing_data(p);
  const Rational chi = weak_secrecy_gain(p);
  if (c.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["polynomial"] = p.to_string();
    j["coefficients"] = ordered_json::parse(p.to_json());
    j["min_norm"] = k.norm;
    j["kissing"] = format_rational(k.count);
    j["weak_gain"] = format_rational(chi);
    j["weak_gain_value"] = jnum(to_double(chi));
    return dump(j);
  }
  std::ostringstream s;
  s << p.to_string() << "\n";
  s << "min_norm " << k.norm << "\n";
  s << "kissing " << format_rational(k.count) << "\n";
  s << "weak_gain " << format_rational(chi) << "\n";
  return s.str();
}

// ---- bound ------------------------------------------------------------------

std::string cmd_bound(const Range& range, const Common& c) {
  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  s << "n,lower_bound,asymptotic,asymptotic_1086,extremal_gain\n";
  for (double nd : range.values()) {
    const auto n = static_cast<unsigned>(std::llround(nd));
    if (n % 8 != 0 || n < 8 || n > 400) throw UsageError("--n-range values must be multiples of 8 in [8, 400]");
    const double lb = secrecy_gain_lower_bound(n);
    const double asym = secrecy_gain_asymptotic(n);
    const double rounded = secrecy_gain_asymptotic_rounded(n);
    std::optional<double> chi;
    if (n <= 200) chi = to_double(weak_secrecy_gain(extremal_theta(n)));
    if (c.format == "json") {
      rows.push_back({{"n", n},
                      {"lower_bound", jnum(lb)},
                      {"asymptotic", jnum(asym)},
                      {"asymptotic_1086", jnum(rounded)},
                      {"extremal_gain", chi ? jnum(*chi) : ordered_json(nullptr)}});
    } else {
      s << n << ',' << num(lb) << ',' << num(asym) << ',' << num(rounded) << ',' << (chi ? num(*chi) : "") << "\n";
    }
  }
  if (c.format == "json") return dump(ordered_json{{"rows", rows}});
  return s.str();
}

// ---- encode / decode --------------------------------------------------------

struct EncodeArgs {
  std::string chain = "z8";
  std::string hex;
  std::size_t bit_count = 0;
  bool voronoi = false;
  bool center = false;
};

std::string cmd_encode(const EncodeArgs& a, const Common& c) {
  Bits bits = parse_hex_bits(a.hex);
  if (a.bit_count > 0) {
    if (a.bit_count > bits.size()) throw UsageError("--bit-count exceeds the number of bits in --bits");
    bits.resize(a.bit_count);
  }
  MultilevelOptions opts;
  opts.voronoi_reduce = a.voronoi;
  opts.center = a.center;
  const MultilevelCodeword w = multilevel_encode(parse_chain(a.chain), bits, opts);
  ordered_json j;
  j["chain"] = a.chain;
  j["bits"] = bits.size();
  j["seed"] = c.seed;
  j["point"] = w.point;
  j["frame_scale2"] = w.frame_scale2;
  j["offset"] = format_rational(w.offset);
  j["coset_labels_per_level"] = w.coset_labels_per_level;
  return dump(j);
}

std::string cmd_decode(const std::string& chain, const std::string& point, std::size_t bit_count, const Common&) {
  const std::vector<double> y = parse_point(point);
  if (y.size() != 8) throw UsageError("--point needs 8 comma-separated coordinates");
  if (bit_count == 0) throw UsageError("--bit-count must be positive");
  const Bits bits = multilevel_decode(y, bit_count, parse_chain(chain));
  ordered_json j;
  j["chain"] = chain;
  j["bits"] = bits.size();
  j["hex"] = bits_to_hex(bits);
  j["bit_string"] = bits_to_string(bits);
  return dump(j);
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string scheme = "coset";
  std::string fine = "Z2";
  std::string coarse = "2Z2";
  double sigma_b = 0.1;
  double sigma_e = 0.5;
  std::size_t trials = 100000;
  std::size_t threads = 0;
  std::int64_t box = 4;
  std::string sweep;
};

std::string cmd_simulate(const SimulateArgs& a, Common c) {
  if (a.trials == 0) throw UsageError("--trials must be positive");
  if (c.format.empty()) c.format = a.sweep.empty() && a.scheme == "coset" ? "json" : "csv";
  if (a.scheme == "pam6") {
    const std::string range = a.sweep.empty() ? "-15:20:5" : a.sweep;
    const Range r = parse_range(range, 1.0, "--sweep");
    const CosetCode code = build_coset_code(lookup_lattice("Z2"), lookup_lattice("2Z2"));
    ordered_json rows = ordered_json::array();
    std::ostringstream s;
    s << "snr_db,p_eve_mc,p_eve_closed,p_eve_bound\n";
    for (double db : r.values()) {
      const double ebn0 = db_to_linear(db);
      const SimResult mc = simulate_pam6_z2(ebn0, a.trials, c.seed, a.threads);
      const double closed = pce_coset_z2(ebn0);
      const double bound = correct_decision_bound(code, pam6_z2_sigma(ebn0));
      if (c.format == "json") {
        rows.push_back({{"snr_db", jnum(db)},
                        {"p_eve_mc", jnum(mc.p_correct)},
                        {"stderr_eve", jnum(mc.standard_error)},
                        {"p_eve_closed", jnum(closed)},
                        {"p_eve_bound", jnum(bound)}});
      } else {
        s << num(db) << ',' << num(mc.p_correct) << ',' << num(closed) << ',' << num(bound) << "\n";
      }
    }
    if (c.format == "json")
      return dump(ordered_json{{"scheme", "pam6"}, {"trials", a.trials}, {"seed", c.seed}, {"rows", rows}});
    return s.str();
  }
  if (a.scheme != "coset") throw UsageError("--scheme must be coset or pam6");

  const CosetCode code = build_coset_code(lookup_lattice(a.fine), lookup_lattice(a.coarse));
  SimulationOptions opts;
  opts.threads = a.threads;
  opts.encode.box = a.box;

  if (!a.sweep.empty()) {
    const Range r = parse_range(a.sweep, 1.0, "--sweep");
    const double n = static_cast<double>(code.coarse().dimension());
    const double vol2n = std::pow(code.coarse().volume(), 2.0 / n);
    std::ostringstream s;
    ordered_json rows = ordered_json::array();
    s << "snr_db,p_eve_mc,p_eve_closed,p_eve_bound\n";
    for (double db : r.values()) {
      const double sigma_e = std::sqrt(vol2n / (2.0 * M_PI * db_to_linear(db)));
      const ChannelParams params{a.sigma_b, sigma_e, c.seed, a.trials};
      const WiretapResult res = simulate_wiretap(code, params, opts);
      const double bound = res.eve.bound.value_or(std::numeric_limits<double>::quiet_NaN());
      if (c.format == "json") {
        rows.push_back({{"snr_db", jnum(db)},
                        {"sigma_e", jnum(sigma_e)},
                        {"p_eve_mc", jnum(res.eve.p_correct)},
                        {"stderr_eve", jnum(res.eve.standard_error)},
                        {"p_eve_closed", nullptr},
                        {"p_eve_bound", jnum(bound)}});
      } else {
        s << num(db) << ',' << num(res.eve.p_correct) << ",," << num(bound) << "\n";
      }
    }
    if (c.format == "json")
      return dump(ordered_json{{"scheme", "coset"}, {"fine", a.fine}, {"coarse", a.coarse}, {"rows", rows}});
    return s.str();
  }

  const ChannelParams params{a.sigma_b, a.sigma_e, c.seed, a.trials};
  const WiretapResult res = simulate_wiretap(code, params, opts);
  ordered_json config;
  config["scheme"] = "coset";
  config["fine"] = a.fine;
  config["coarse"] = a.coarse;
  config["k"] = code.k();
  config["sigma_b"] = jnum(a.sigma_b);
  config["sigma_e"] = jnum(a.sigma_e);
  config["box"] = a.box;
  ordered_json j;
  j["config"] = config;
  j["p_bob"] = jnum(res.bob.p_correct);
  j["p_eve"] = jnum(res.eve.p_correct);
  j["stderr_bob"] = jnum(res.bob.standard_error);
  j["stderr_eve"] = jnum(res.eve.standard_error);
  j["theta_bound_eve"] = res.eve.bound ? jnum(*res.eve.bound) : ordered_json(nullptr);
  j["theta_bound_bob"] = res.bob.bound ? jnum(*res.bob.bound) : ordered_json(nullptr);
  j["trials"] = a.trials;
  j["seed"] = c.seed;
  return dump(j);
}

// ---- catalog ----------------------------------------------------------------

std::string cmd_catalog(const Common& c) {
  const auto lattices = catalog_lattices();
  const auto codes = catalog_codes();
  if (c.format == "json") {
    ordered_json j;
    ordered_json ls = ordered_json::array();
    for (const auto& e : lattices) ls.push_back({{"name", e.name}, {"description", e.description}});
    ordered_json cs = ordered_json::array();
    for (const auto& e : codes) {
      cs.push_back({{"name", e.name},
                    {"n", e.code.length()},
                    {"kappa", e.code.dimension()},
                    {"min_distance", e.code.min_distance()},
                    {"generator_rows", e.code.generator_strings()}});
    }
    j["lattices"] = ls;
    j["codes"] = cs;
    return dump(j);
  }
  std::ostringstream s;
  s << "kind,name,detail\n";
  for (const auto& e : lattices) s << "lattice," << e.name << ",\"" << e.description << "\"\n";
  for (const auto& e : codes) {
    s << "code," << e.name << ",\"(" << e.code.length() << ',' << e.code.dimension() << ',' << e.code.min_distance()
      << ")\"\n";
  }
  return s.str();
}

std::string error_json(const std::string& kind, const std::string& message) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j.dump() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice coset codes for the Gaussian wiretap channel: secrecy gains, codecs and simulation",
               "latsec"};
  app.require_subcommand(1);
  app.footer(
      "CSV columns:\n"
      "  curve     y_db,xi,theta_lattice,theta_cubic   (y_db = 10 log10 y)\n"
      "  bound     n,lower_bound,asymptotic,asymptotic_1086,extremal_gain\n"
      "  simulate  snr_db,p_eve_mc,p_eve_closed,p_eve_bound   (sweep mode)\n"
      "  catalog   kind,name,detail\n"
      "Numbers carry 17 significant digits. Exit codes: 0 ok, 1 computation error\n"
      "(a JSON error object is printed), 2 usage error.");

  Common gain_c, curve_c, extremal_c, bound_c, encode_c, decode_c, sim_c, cat_c;

  std::string gain_target;
  auto* gain = app.add_subcommand("gain", "Weak (exact when possible) and strong secrecy gain");
  gain->add_option("lattice", gain_target, "Catalog name, Leech, extremal<n> or a dimension n")->required();
  add_common(gain, gain_c, "text");

  std::string curve_target;
  std::string curve_range = "-10:10:0.1";
  auto* curve = app.add_subcommand("curve", "Secrecy function over a dB range of y");
  curve->add_option("lattice", curve_target, "Lattice or theta-series name")->required();
  curve->add_option("--y-range", curve_range, "low:high[:step] in dB")->capture_default_str();
  add_common(curve, curve_c, "csv");

  unsigned extremal_n = 0;
  auto* extremal = app.add_subcommand("extremal", "Extremal theta series as a polynomial in E4 and Delta");
  extremal->add_option("n", extremal_n, "Dimension, a multiple of 8")->required();
  add_common(extremal, extremal_c, "text");

  std::string n_range = "8:160:8";
  auto* bound = app.add_subcommand("bound", "Lower bound on the best secrecy gain per dimension");
  bound->add_option("--n-range", n_range, "low:high[:step] over multiples of 8")->capture_default_str();
  add_common(bound, bound_c, "csv");

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Multilevel nested-lattice encoder");
  encode->add_option("--chain", enc.chain, "Lattice chain")->check(CLI::IsMember({"z8", "e8"}));
  encode->add_option("--bits", enc.hex, "Data bits as hex, most significant bit first")->required();
  encode->add_option("--bit-count", enc.bit_count, "Use only the first N bits of --bits");
  encode->add_flag("--voronoi", enc.voronoi, "Reduce modulo the shaping lattice");
  encode->add_flag("--center", enc.center, "Report the centering offset of the constellation");
  add_common(encode, encode_c, "json");

  std::string dec_chain = "z8";
  std::string dec_point;
  std::size_t dec_bits = 0;
  auto* decode = app.add_subcommand("decode", "Multistage decoder for the multilevel encoder");
  decode->add_option("--chain", dec_chain, "Lattice chain")->check(CLI::IsMember({"z8", "e8"}));
  decode->add_option("--point", dec_point, "8 comma-separated coordinates in the encoder frame")->required();
  decode->add_option("--bit-count", dec_bits, "Number of data bits")->required();
  add_common(decode, decode_c, "json");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo of Bob and Eve decoding a coset code");
  simulate->add_option("--scheme", sim.scheme, "coset (any nested pair) or pam6 (6-PAM Z2/2Z2)")->capture_default_str()
      ->check(CLI::IsMember({"coset", "pam6"}));
  simulate->add_option("--fine", sim.fine, "Bob's lattice")->capture_default_str();
  simulate->add_option("--coarse", sim.coarse, "Eve's lattice")->capture_default_str();
  simulate->add_option("--sigma-b", sim.sigma_b, "Bob's noise deviation per dimension")->capture_default_str();
  simulate->add_option("--sigma-e", sim.sigma_e, "Eve's noise deviation per dimension")->capture_default_str();
  simulate->add_option("--trials", sim.trials, "Monte Carlo trials")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();
  simulate->add_option("--box", sim.box, "Random coarse coordinates lie in [-box, box]")->capture_default_str();
  simulate->add_option("--sweep", sim.sweep,
                       "low:high[:step] in dB; Eve's GSNR for coset, Eb/N0 for pam6 (emits CSV)");
  add_common(simulate, sim_c, "");

  auto* catalog = app.add_subcommand("catalog", "List named lattices and codes");
  add_common(catalog, cat_c, "json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gain) emit(gain_c, cmd_gain(gain_target, gain_c), out);
    else if (*curve) emit(curve_c, cmd_curve(curve_target, parse_range(curve_range, 0.1, "--y-range"), curve_c), out);
    else if (*extremal) emit(extremal_c, cmd_extremal(extremal_n, extremal_c), out);
    else if (*bound) emit(bound_c, cmd_bound(parse_range(n_range, 8.0, "--n-range"), bound_c), out);
    else if (*encode) emit(encode_c, cmd_encode(enc, encode_c), out);
    else if (*decode) emit(decode_c, cmd_decode(dec_chain, dec_point, dec_bits, decode_c), out);
    else if (*simulate) emit(sim_c, cmd_simulate(sim, sim_c), out);
    else if (*catalog) emit(cat_c, cmd_catalog(cat_c), out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(to_string(e.kind()), e.what());
    return 1;
  } catch (const std::exception& e) {
    out << error_json("internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace latsec::cli
