#include "gtheta/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <memory>
#include <sstream>

#include "gtheta/errors.hpp"
#include "gtheta/root_system.hpp"
#include "gtheta/serialization.hpp"
#include "gtheta/trilinear.hpp"
#include "gtheta/verlinde.hpp"

namespace gtheta::cli {
namespace {

using nlohmann::json;

// Failure of a verification command; maps to exit code 1.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("malformed " + what + " '" + text + "'");
  return value;
}

verlinde::Options options_from_environment() {
  verlinde::Options options;
  if (const char* cap = std::getenv("THETA_PRECISION_CAP")) {
    options.precision_cap = parse_long(cap, "THETA_PRECISION_CAP");
    if (options.precision_cap < 64) throw UsageError("THETA_PRECISION_CAP must be at least 64");
  }
  return options;
}

std::string format_residual(double r) {
  std::ostringstream os;
  os << std::setprecision(6) << r;
  return os.str();
}

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "stdout" || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// ---- verlinde -----------------------------------------------------------

struct VerlindeArgs {
  std::string algebra;
  long level = 0;
  long genus = 0;
  std::string genus_range;
  std::string format = "table";
  std::string out;
  std::string method = "verlinde";
};

OutputRecord compute_record(const roots::TypeTag& type, long level, long genus, const std::string& method,
                            const verlinde::Options& options) {
  OutputRecord r;
  r.algebra = type.to_string();
  r.level = level;
  r.genus = genus;
  r.method = method;
  if (method == "closed_form") {
    if (genus < 2 || genus > options.genus_cap) throw UsageError("genus out of range");
    if (type == roots::TypeTag::G2() && level == 1) r.dimension = verlinde::closed_form_g2(genus).get_str();
    else if (type == roots::TypeTag::A(1) && level == 3)
      r.dimension = verlinde::closed_form_sl2_level3(genus).get_str();
    else throw UsageError("closed forms exist only for G2 level 1 and A1 level 3");
    return r;
  }
  const verlinde::VerlindeResult v = verlinde::verlinde_dim(type, level, genus, options);
  r.dimension = v.dimension.get_str();
  r.residual = v.residual;
  r.precision_bits = v.precision_bits_used;
  return r;
}

void emit_records(const std::vector<OutputRecord>& records, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json doc = json::array();
    for (const auto& r : records) doc.push_back(to_json(r));
    os << doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << csv_header() << "\n";
    for (const auto& r : records) os << to_csv_row(r) << "\n";
  } else {
    os << std::left << std::setw(8) << "algebra" << std::setw(7) << "level" << std::setw(7) << "genus"
       << std::setw(22) << "dimension" << std::setw(13) << "method" << std::setw(14) << "residual"
       << "bits\n";
    for (const auto& r : records)
      os << std::left << std::setw(8) << r.algebra << std::setw(7) << r.level << std::setw(7) << r.genus
         << std::setw(22) << r.dimension << std::setw(13) << r.method << std::setw(14)
         << format_residual(r.residual) << r.precision_bits << "\n";
  }
}

int cmd_verlinde(const VerlindeArgs& a, std::ostream& out) {
  const roots::TypeTag type = roots::TypeTag::parse(a.algebra);
  if (a.level < 1) throw UsageError("--level must be at least 1");
  long lo = a.genus, hi = a.genus;
  if (!a.genus_range.empty()) std::tie(lo, hi) = parse_genus_range(a.genus_range);
  const verlinde::Options options = options_from_environment();
  if (lo < 2) throw UsageError("genus must be at least 2");
  if (hi > options.genus_cap) throw UsageError("genus exceeds the configured cap");

  std::vector<std::future<OutputRecord>> pending;
  for (long g = lo; g <= hi; ++g)
    pending.push_back(std::async(std::launch::async, compute_record, type, a.level, g, a.method, options));
  std::vector<OutputRecord> records;
  for (auto& f : pending) records.push_back(f.get());

  Sink sink(a.out, out);
  emit_records(records, a.format, sink.get());
  return kSuccess;
}

// ---- identities ---------------------------------------------------------

int cmd_identities(const std::string& range, const std::string& format, std::ostream& out) {
  const auto [lo, hi] = parse_genus_range(range);
  const verlinde::Options options = options_from_environment();
  if (lo < 2 || hi > options.genus_cap)
    throw UsageError("genus range must satisfy 2 <= lo <= hi <= " + std::to_string(options.genus_cap));
  const verlinde::IdentityReport report = verlinde::identity_suite(lo, hi, options);

  if (format == "json") {
    json doc = json::array();
    for (const auto& row : report.rows)
      for (const auto& c : row.checks)
        doc.push_back({{"genus", row.genus}, {"id", c.id}, {"description", c.description},
                       {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "genus,id,description,lhs,rhs,pass\n";
    for (const auto& row : report.rows)
      for (const auto& c : row.checks)
        out << row.genus << "," << c.id << ",\"" << c.description << "\"," << c.lhs << "," << c.rhs << ","
            << (c.pass ? "true" : "false") << "\n";
  } else {
    for (const auto& row : report.rows) {
      out << "g = " << row.genus << "\n";
      for (const auto& c : row.checks)
        out << "  (" << c.id << ") " << std::left << std::setw(40) << c.description << c.lhs
            << (c.pass ? " = " : " != ") << c.rhs << (c.pass ? "  pass" : "  FAIL") << "\n";
    }
  }
  if (!report.passed()) throw VerificationFailure("identity failed: " + report.first_failure());
  return kSuccess;
}

// ---- octonion-verify ----------------------------------------------------

int cmd_octonion_verify(bool as_json, const octonion::TableSource& tables, std::ostream& out) {
  using namespace octonion;
  json checks = json::array();
  std::string first_failure;
  const auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass && first_failure.empty()) first_failure = name + ": " + detail;
  };

  json summary = json::object();
  try {
    std::array<std::unique_ptr<StructureConstants>, 4> sc;
    for (BasisId b : {BasisId::B0, BasisId::B1, BasisId::B2, BasisId::B3})
      sc[static_cast<std::size_t>(b)] = std::make_unique<StructureConstants>(build_structure_constants(b, tables));
    record("tables", true, "B3 table matches the permuted B2 table; B0 satisfies e_i^2=-1 and anticommutativity");

    const auto& b2 = *sc[static_cast<std::size_t>(BasisId::B2)];
    const auto& b3 = *sc[static_cast<std::size_t>(BasisId::B3)];

    bool lemmas_ok = true;
    for (Lemma which : {Lemma::SL3, Lemma::SO4}) {
      const LemmaReport rep = verify_lemma_tables(which, tables);
      const std::string name = which == Lemma::SL3 ? "lemma-sl3" : "lemma-so4";
      std::string detail = std::to_string(rep.triples.size()) + " triples, " +
                           std::to_string(rep.nonzero_orbits) + " nonzero";
      if (const auto f = rep.first_failure()) {
        detail = "omega(y" + std::to_string(f->labels[0]) + ",y" + std::to_string(f->labels[1]) + ",y" +
                 std::to_string(f->labels[2]) + ") expected " + f->expected.to_string() + ", computed " +
                 f->computed.to_string();
      }
      record(name, rep.passed(), detail);
      lemmas_ok = lemmas_ok && rep.passed();
    }
    summary["lemmas"] = lemmas_ok ? "pass" : "fail";

    const trilinear::AlternatingForm3 w = trilinear::from_octonion_omega(b2);
    const auto pairing = trilinear::engel_pairing(w);
    const auto lambda = trilinear::proportionality_constant(pairing.gram, gram_matrix(b2));
    const bool nondegenerate = trilinear::is_nondegenerate(w);
    record("engel-pairing", lambda.has_value() && nondegenerate,
           lambda ? "B_omega = (" + lambda->to_string() + ")*Q in B2" : "B_omega not proportional to Q");
    summary["engel_lambda"] = lambda ? lambda->to_string() : "";
    summary["nondegenerate"] = nondegenerate;

    const DerivationAlgebra der = derivation_algebra(b2);
    bool leibniz = closed_under_bracket(der);
    for (const auto& d : der.basis_maps) leibniz = leibniz && satisfies_leibniz(b2, d);
    record("derivations", der.dimension() == 14 && leibniz,
           "dimension " + std::to_string(der.dimension()) + (leibniz ? ", Leibniz and bracket closure hold" : ""));
    summary["derivations"] = der.dimension();

    const auto p2 = [](int l) { return position_of(BasisId::B2, l); };
    const DerivationAlgebra sl3 = stabilizer_subalgebra(der, {{p2(2), p2(3), p2(4)}, {p2(5), p2(6), p2(1)}});
    record("sl3-stabilizer", sl3.dimension() == 8 && closed_under_bracket(sl3),
           "dimension " + std::to_string(sl3.dimension()));
    summary["sl3_stabilizer"] = sl3.dimension();

    const DerivationAlgebra der3 = derivation_algebra(b3);
    const auto p3 = [](int l) { return position_of(BasisId::B3, l); };
    const DerivationAlgebra so4 =
        stabilizer_subalgebra(der3, {{p3(1), p3(2), p3(4), p3(5)}, {p3(3), p3(6), p3(7)}});
    record("so4-stabilizer", so4.dimension() == 6 && closed_under_bracket(so4),
           "dimension " + std::to_string(so4.dimension()));
    summary["so4_stabilizer"] = so4.dimension();
  } catch (const ConstructionError& e) {
    record("tables", false, e.what());
  }

  const bool passed = first_failure.empty();
  if (as_json) {
    json doc{{"passed", passed}, {"checks", checks}, {"summary", summary}};
    out << doc.dump(2) << "\n";
  } else if (passed) {
    out << "derivations: " << summary["derivations"].get<std::size_t>()
        << ", sl3-stabilizer: " << summary["sl3_stabilizer"].get<std::size_t>()
        << ", so4-stabilizer: " << summary["so4_stabilizer"].get<std::size_t>()
        << ", lemmas: " << summary["lemmas"].get<std::string>() << "\n";
  }
  if (!passed) throw VerificationFailure(first_failure);
  return kSuccess;
}

// ---- dynkin -------------------------------------------------------------

int cmd_dynkin(const std::string& algebra, const std::string& weight, std::ostream& out) {
  const auto rs = roots::build(roots::TypeTag::parse(algebra));
  roots::IntVector coords;
  std::stringstream ss(weight);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const long c = parse_long(item, "weight coordinate");
    if (c < 0) throw UsageError("weight coordinates must be nonnegative");
    coords.push_back(c);
  }
  if (coords.size() != static_cast<std::size_t>(rs->rank()))
    throw UsageError("weight needs " + std::to_string(rs->rank()) + " coordinates");
  out << roots::dynkin_index(rs->from_fundamental(coords)).pretty() << "\n";
  return kSuccess;
}

}  // namespace

json to_json(const OutputRecord& r) {
  return {{"algebra", r.algebra}, {"level", r.level},     {"genus", r.genus},
          {"dimension", r.dimension}, {"method", r.method}, {"residual", r.residual},
          {"precision_bits", r.precision_bits}};
}

OutputRecord record_from_json(const json& j) {
  try {
    OutputRecord r;
    r.algebra = j.at("algebra").get<std::string>();
    r.level = j.at("level").get<long>();
    r.genus = j.at("genus").get<long>();
    r.dimension = j.at("dimension").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.residual = j.at("residual").get<double>();
    r.precision_bits = j.at("precision_bits").get<long>();
    if (r.dimension.empty() || r.dimension.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("dimension must be a nonnegative decimal integer");
    if (r.method != "verlinde" && r.method != "closed_form") throw UsageError("unknown method " + r.method);
    return r;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  }
}

const std::string& csv_header() {
  static const std::string header = "algebra,level,genus,dimension,method,residual,precision_bits";
  return header;
}

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << r.algebra << "," << r.level << "," << r.genus << "," << r.dimension << "," << r.method << ","
     << std::setprecision(17) << r.residual << "," << r.precision_bits;
  return os.str();
}

std::pair<long, long> parse_genus_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("genus range must look like lo..hi");
  const long lo = parse_long(text.substr(0, dots), "genus range");
  const long hi = parse_long(text.substr(dots + 2), "genus range");
  if (hi < lo) throw UsageError("genus range is empty");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const octonion::TableSource& tables) {
  CLI::App app{"Dimensions of spaces of generalized theta functions and G2 octonion checks", "gtheta"};
  app.require_subcommand(1);

  VerlindeArgs va;
  auto* verl = app.add_subcommand("verlinde", "Certified Verlinde dimensions");
  verl->add_option("--algebra", va.algebra, "A<n> or G2")->required();
  verl->add_option("--level", va.level, "Level (>= 1)")->required();
  auto* genus_opt = verl->add_option("--genus", va.genus, "Genus (>= 2)");
  auto* range_opt = verl->add_option("--genus-range", va.genus_range, "Genus range lo..hi");
  genus_opt->excludes(range_opt);
  verl->add_option("--format", va.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  verl->add_option("--out", va.out, "Output path (default stdout)");
  verl->add_option("--method", va.method, "Evaluation method")
      ->check(CLI::IsMember({"verlinde", "closed_form"}));

  std::string id_range, id_format = "table";
  auto* ids = app.add_subcommand("identities", "Dimension identities over a genus range");
  ids->add_option("--genus-range", id_range, "Genus range lo..hi")->required();
  ids->add_option("--format", id_format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

  bool oct_json = false;
  auto* oct = app.add_subcommand("octonion-verify", "Check octonion tables, lemmas and derivation algebras");
  oct->add_flag("--json", oct_json, "Emit a JSON report");

  std::string dyn_algebra, dyn_weight;
  auto* dyn = app.add_subcommand("dynkin", "Dynkin index of an irreducible representation");
  dyn->add_option("--algebra", dyn_algebra, "A<n> or G2")->required();
  dyn->add_option("--weight", dyn_weight, "Highest weight c1,c2,... in fundamental weights")->required();

  std::string exp_basis = "B2";
  bool exp_form = false;
  auto* exp = app.add_subcommand("export", "Export structure constants or the trilinear form as JSON");
  exp->add_option("--basis", exp_basis, "B0, B1, B2 or B3")->check(CLI::IsMember({"B0", "B1", "B2", "B3"}));
  exp->add_flag("--form", exp_form, "Export the trilinear form instead of the table");

  std::vector<std::string> argv_storage{"gtheta"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*verl) {
      if (!*genus_opt && !*range_opt) throw UsageError("one of --genus or --genus-range is required");
      return cmd_verlinde(va, out);
    }
    if (*ids) return cmd_identities(id_range, id_format, out);
    if (*oct) return cmd_octonion_verify(oct_json, tables, out);
    if (*dyn) return cmd_dynkin(dyn_algebra, dyn_weight, out);
    if (*exp) {
      const auto sc = octonion::build_structure_constants(octonion::parse_basis(exp_basis), tables);
      const json doc = exp_form ? gtheta::to_json(trilinear::from_octonion_omega(sc), sc.basis()) : gtheta::to_json(sc);
      out << doc.dump(2) << "\n";
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << " (residual " << e.residual() << ", precision "
        << e.precision_bits() << " bits)\n";
    return kCertificationFailed;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace gtheta::cli
