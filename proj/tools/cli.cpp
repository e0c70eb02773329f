#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gspec/errors.hpp"
#include "gspec/expr.hpp"
#include "gspec/oracle.hpp"

namespace gspec::cli {

namespace {

struct OutputRecord {
  unsigned degree;
  std::string kind;  // labeled | isotype | coefficient | profile
  std::string key;
  std::string value;
};

enum class Format { text, json, csv };

class Writer {
 public:
  Writer(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const OutputRecord& r) {
    switch (format_) {
      case Format::text:
        out_ << r.degree << '\t' << r.kind << '\t' << (r.key.empty() ? "-" : r.key) << '\t' << r.value << '\n';
        break;
      case Format::json:
        out_ << nlohmann::json{{"degree", r.degree}, {"kind", r.kind}, {"key", r.key}, {"value", r.value}}.dump()
             << '\n';
        break;
      case Format::csv:
        if (!header_written_) {
          out_ << "degree,kind,key,value\n";
          header_written_ = true;
        }
        out_ << r.degree << ',' << r.kind << ',' << csv_field(r.key) << ',' << csv_field(r.value) << '\n';
        break;
    }
  }

  // A csv document with no rows still has its header.
  void finish() {
    if (format_ == Format::csv && !header_written_) out_ << "degree,kind,key,value\n";
  }

 private:
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }

  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

std::string integral(const Rational& v, const std::string& what, unsigned n) {
  if (!is_integer(v))
    throw InconsistentSeriesError(what + " at degree " + std::to_string(n) + " is not an integer: " + to_string(v));
  return to_string(v);
}

struct CountRequest {
  std::string kind = "isotype";
  unsigned max = 10;
  bool quotient = false;
  std::string element;
};

void emit_counts(Writer& w, const Species& species, const CountRequest& req, const std::string& label = {}) {
  const GroupCycleIndexSeries g = as_gamma(species);
  std::optional<OneVariableSeries> series;
  std::string key = label;
  auto append_key = [&key](const std::string& part) { key = key.empty() ? part : key + ":" + part; };
  if (req.quotient) {
    if (!req.element.empty()) throw std::invalid_argument("--quotient and --element are exclusive");
    const CycleIndexSeries q = quotient(g);
    series = req.kind == "labeled" ? labeled_egf(q) : isotype_ogf(q);
    append_key("quotient");
  } else if (!req.element.empty()) {
    const GroupElement gamma = parse_element(req.element, g.group()->degree());
    series = req.kind == "labeled" ? gamma_labeled_egf(g, gamma) : gamma_isotype_ogf(g, gamma);
    append_key(gamma.to_string());
  } else {
    series = req.kind == "labeled" ? labeled_egf(g.identity_component()) : isotype_ogf(g.identity_component());
  }
  for (unsigned n = 0; n <= req.max; ++n) {
    Rational v = series->coefficient(n);
    if (req.kind == "labeled") v *= Rational(factorial(n));
    w.write({n, req.kind, key, integral(v, req.kind + " count", n)});
  }
}

void emit_coefficients(Writer& w, const Species& species, unsigned max, const std::string& element) {
  const GroupCycleIndexSeries g = as_gamma(species);
  const CycleIndexSeries& f = element.empty() ? g.identity_component()
                                              : g.component(parse_element(element, g.group()->degree()));
  for (unsigned n = 0; n <= max; ++n) {
    const Stratum& s = f.stratum(n);
    const auto& parts = PartitionTable::of(n);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!is_zero(s[i])) w.write({n, "coefficient", parts[i].to_string(), to_string(s[i])});
  }
}

std::string profile_text(const std::vector<unsigned>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

void emit_expansion(Writer& w, const Species& species, unsigned vars, unsigned max, bool total_only) {
  const auto e = expand_symmetric(as_gamma(species).identity_component(), vars, max);
  for (unsigned n = 0; n <= max; ++n) {
    if (total_only && n != max) continue;
    if (!total_only)
      for (const auto& [profile, c] : e.stratum(n)) w.write({n, "profile", profile_text(profile), to_string(c)});
    w.write({n, "profile", "total", to_string(e.total(n))});
  }
}

constexpr const char* kBinaryTrees = "let B = 1 + X*restrict(L_rev,2,3)(B) in B";
constexpr const char* kLeafTrees = "let R = X + E_2(R) in R";
constexpr const char* kTernaryTrees = "let T = 1 + X*L_k_interchange:S3(T) in T";

const std::vector<std::string> kExamples = {"rblt",          "digraph-conversity",        "binary-tree-reversal",
                                            "paths-polygons", "self-complementary-graphs", "kary-interchange"};

void run_example(Writer& w, const std::string& name) {
  CountRequest isotype_quotient;
  isotype_quotient.quotient = true;
  if (name == "rblt") {
    emit_expansion(w, evaluate_expression(kLeafTrees), 4, 8, true);
  } else if (name == "digraph-conversity") {
    isotype_quotient.max = 6;
    emit_counts(w, evaluate_expression("digraph"), isotype_quotient);
  } else if (name == "binary-tree-reversal") {
    isotype_quotient.max = 9;
    emit_counts(w, evaluate_expression(kBinaryTrees), isotype_quotient);
  } else if (name == "paths-polygons") {
    for (const auto& [label, expr] : {std::pair{"paths", "L_rev"}, std::pair{"polygons", "C_rev"}})
      for (const char* kind : {"labeled", "isotype"}) {
        CountRequest req;
        req.kind = kind;
        req.max = 6;
        req.quotient = true;
        emit_counts(w, evaluate_expression(expr), req, label);
      }
  } else if (name == "self-complementary-graphs") {
    CountRequest req;
    req.max = 5;
    req.element = "(1 2)";
    emit_counts(w, evaluate_expression("graph"), req);
  } else if (name == "kary-interchange") {
    isotype_quotient.max = 6;
    emit_counts(w, evaluate_expression(kTernaryTrees), isotype_quotient);
  } else {
    throw CLI::ValidationError("example", "unknown example '" + name + "'");
  }
}

int run_verify(std::ostream& out, unsigned max_n) {
  bool all_ok = true;
  for (const auto& pairing : oracle::builtin_pairings()) {
    const auto report = oracle::cross_check(pairing, max_n);
    out << (report.ok() ? "PASS " : "FAIL ") << report.name << " n<=" << report.max_n << " checks=" << report.checks
        << '\n';
    for (const auto& m : report.mismatches) out << "  " << m << '\n';
    all_ok = all_ok && report.ok();
  }
  return all_ok ? ok : verify_mismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle index series of species and Γ-species"};
  app.require_subcommand(1);
  Format format = Format::text;
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}))
      ->capture_default_str();

  std::string expr;
  CountRequest counts;
  auto* counts_cmd = app.add_subcommand("counts", "Counting sequence of a species expression");
  counts_cmd->add_option("expr", expr, "Species expression")->required();
  counts_cmd->add_option("--kind", counts.kind, "labeled or isotype")
      ->check(CLI::IsMember({"labeled", "isotype"}))
      ->capture_default_str();
  counts_cmd->add_option("--max", counts.max, "Largest degree")->capture_default_str();
  counts_cmd->add_flag("--quotient", counts.quotient, "Count orbits under the group");
  counts_cmd->add_option("--element", counts.element, "Group element in cycle notation, e.g. \"(1 2)\"");

  unsigned max = 6;
  std::string element;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Nonzero cycle index coefficients");
  coeffs_cmd->add_option("expr", expr, "Species expression")->required();
  coeffs_cmd->add_option("--max", max, "Largest degree")->capture_default_str();
  coeffs_cmd->add_option("--element", element, "Group element in cycle notation");

  unsigned vars = 2;
  auto* expand_cmd = app.add_subcommand("expand", "Partially labeled counts by exponent profile");
  expand_cmd->add_option("expr", expr, "Species expression")->required();
  expand_cmd->add_option("--vars", vars, "Number of variables")->capture_default_str();
  expand_cmd->add_option("--max", max, "Largest degree")->capture_default_str();

  std::string example;
  auto* example_cmd = app.add_subcommand("example", "Reproduce a worked example");
  example_cmd->add_option("name", example, "Example name")->required()->check(CLI::IsMember(kExamples));

  unsigned max_n = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check built-in series against brute-force enumeration");
  verify_cmd->add_option("--max-n", max_n, "Largest structure size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  // records are held back until the command succeeds, so a failure never
  // leaves a truncated table on stdout
  std::ostringstream buffer;
  Writer writer(buffer, format);
  try {
    if (*verify_cmd) return run_verify(out, max_n);
    if (*example_cmd) {
      run_example(writer, example);
    } else if (*counts_cmd) {
      emit_counts(writer, evaluate_expression(expr), counts);
    } else if (*coeffs_cmd) {
      emit_coefficients(writer, evaluate_expression(expr), max, element);
    } else if (*expand_cmd) {
      emit_expansion(writer, evaluate_expression(expr), vars, max, false);
    }
    writer.finish();
    out << buffer.str();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return computation_error;
  }
  return ok;
}

}  // namespace gspec::cli
