#include "qbox/cli.hpp"

#include <iomanip>
#include <iostream>
#include <iterator>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbox/errors.hpp"
#include "qbox/numeric.hpp"
#include "qbox/render.hpp"

namespace qbox::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDecimalDigits = 50;

struct Config {
  std::string command;
  int max_p = 0;
  int max_degree = 8;
  int degree = 0;
  std::int64_t terms = 100000;
  std::string format = "text";
  bool use_relations = false;
  std::string moment_orders = "1,2";
  std::string poly;
  std::string table_path;
  int points = 101;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::set<int> parse_orders(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "0" && item != "1" && item != "2") {
      throw UsageError("--moment-orders accepts a subset of {0,1,2}, got '" + text + "'");
    }
    out.insert(item[0] - '0');
  }
  if (out.empty()) throw UsageError("--moment-orders is empty");
  return out;
}

void require_format(const Config& c, std::initializer_list<std::string_view> allowed) {
  for (const auto f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("--format " + c.format + " is not available for '" + c.command + "'");
}

std::string weight_text(const WeightForm& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, t] : w.terms) {
    if (!first) os << " + ";
    first = false;
    const std::string tail = "/(n^" + std::to_string(q) + " pi^" + std::to_string(q) + ")";
    if (t.v == -t.u) {
      os << t.u << "[1 - (-1)^n]" << tail;
    } else if (t.v == t.u) {
      os << t.u << "[1 + (-1)^n]" << tail;
    } else {
      os << "[" << t.u << (t.v.sign() < 0 ? " - " : " + ") << t.v.abs() << "(-1)^n]" << tail;
    }
  }
  return os.str();
}

json entry_json(const SumSymbol& s, const ClosedFormEntry& e) {
  return json{{"kind", std::string(to_string(s.kind()))},
              {"p", s.argument()},
              {"coefficient", e.value.coefficient().to_string()},
              {"pi_power", e.value.pi_power()},
              {"decimal", decimal(e.value, kDecimalDigits)},
              {"relation_derived", e.relation_derived}};
}

json table_json(const ClosedFormTable& t) {
  json arr = json::array();
  for (const auto& [s, e] : t.entries()) arr.push_back(entry_json(s, e));
  return arr;
}

void print_table_text(std::ostream& out, const ClosedFormTable& t) {
  for (const auto& [s, e] : t.entries()) {
    out << std::left << std::setw(11) << s.to_string() << " = " << std::setw(34)
        << e.value.to_string() << " = " << decimal(e.value, kDecimalDigits)
        << (e.relation_derived ? "  [via relations]" : "") << '\n';
  }
}

json discrepancies_json(const std::vector<Discrepancy>& ds) {
  json arr = json::array();
  for (const auto& d : ds) {
    arr.push_back({{"symbol", d.symbol.to_string()},
                   {"published", PiScaled(d.published, d.symbol.argument()).to_string()},
                   {"derived", PiScaled(d.derived, d.symbol.argument()).to_string()}});
  }
  return arr;
}

void print_discrepancies(std::ostream& os, const std::vector<Discrepancy>& ds) {
  for (const auto& d : ds) {
    os << "discrepancy: " << d.symbol.to_string() << " published as "
       << PiScaled(d.published, d.symbol.argument()).to_string() << ", derived "
       << PiScaled(d.derived, d.symbol.argument()).to_string() << '\n';
  }
}

DeriveOptions derive_options(const Config& c) {
  DeriveOptions o;
  o.use_relations = c.use_relations;
  o.moment_orders = parse_orders(c.moment_orders);
  return o;
}

int cmd_derive(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"text", "json"});
  const ClosedFormTable table = derive(c.max_p, derive_options(c));
  if (c.format == "json") {
    out << table_json(table).dump(2) << '\n';
  } else {
    print_table_text(out, table);
  }
  print_discrepancies(err, compare_with_published(table));
  return kOk;
}

int cmd_analyze(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const BoxPolynomial p = parse_wavefunction(c.poly);
  const ClosedFormTable table = derive(weight_form(p).max_q());
  const AnalysisReport r = analyze(p, &table);

  bool all_zero = true;
  for (const auto& m : r.moments) {
    if (m.residual && !m.residual->is_zero()) all_zero = false;
  }

  if (c.format == "json") {
    json weights = json::array();
    for (const auto& [q, t] : r.weight.terms) {
      weights.push_back({{"q", q}, {"U", t.u.to_string()}, {"V", t.v.to_string()}});
    }
    json moments = json::array();
    for (const auto& m : r.moments) {
      json jm{{"k", m.order}, {"direct", m.direct.to_string()}};
      if (m.form) {
        jm["series"] = m.form->to_string();
        jm["residual"] = m.residual ? json(m.residual->to_string()) : json(nullptr);
      } else {
        jm["series"] = "divergent";
      }
      moments.push_back(std::move(jm));
    }
    const json doc{{"polynomial", r.polynomial},
                   {"degree", r.degree},
                   {"norm_squared", r.norm_squared.to_string()},
                   {"mean_energy_hbar2_over_m_a2", r.mean_energy_hbar.to_string()},
                   {"mean_energy_units", r.mean_energy.to_string()},
                   {"h2_moment_units", r.h2_moment.to_string()},
                   {"weights", weights},
                   {"moments", moments},
                   {"shift_parity", std::string(to_string(r.parity))},
                   {"lambda_only", r.lambda_only},
                   {"nodes", r.nodes}};
    out << doc.dump(2) << '\n';
  } else {
    out << "psi(x)         = " << r.polynomial << "  (unnormalized, a = 1)\n"
        << "degree         = " << r.degree << '\n'
        << "norm^2         = " << r.norm_squared << '\n'
        << "<H>            = " << r.mean_energy_hbar << " hbar^2/(m a^2)  (" << r.mean_energy
        << " hbar^2/(2 m a^2))\n"
        << "(H psi, H psi) = " << r.h2_moment / Rational(4) << " hbar^4/(m^2 a^4)\n"
        << "W(E_n)         = " << weight_text(r.weight) << '\n'
        << "shift parity   = " << to_string(r.parity) << '\n'
        << "lambda only    = " << (r.lambda_only ? "yes" : "no") << '\n'
        << "nodes in (0,1) = " << r.nodes << '\n';
    for (const auto& m : r.moments) {
      out << "moment k=" << m.order << "     : ";
      if (!m.form) {
        out << "divergent\n";
        continue;
      }
      out << m.form->to_string() << " = " << m.direct;
      if (m.residual) out << "  (residual " << *m.residual << ")";
      out << '\n';
    }
  }
  return all_zero ? kOk : kFailed;
}

int cmd_table(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const auto rows = reproduce_table(c.max_degree);
  ClosedFormTable merged;
  for (const auto& row : rows) {
    for (const auto& [s, e] : row.table.entries()) {
      if (!merged.contains(s)) merged.set(s, e.value.coefficient(), e.relation_derived);
    }
  }
  const auto ds = compare_with_published(merged);
  if (c.format == "json") {
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back(
          {{"degree", row.degree}, {"p", row.attainable_p}, {"sums", table_json(row.table)}});
    }
    out << json{{"rows", jrows}, {"discrepancies", discrepancies_json(ds)}}.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      out << "degree " << row.degree << ": p =";
      for (const int p : row.attainable_p) out << ' ' << p;
      out << '\n';
      print_table_text(out, row.table);
      out << '\n';
    }
    print_discrepancies(out, ds);
  }
  return kOk;
}

std::string read_all(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

int cmd_verify(const Config& c, std::istream& in, std::ostream& out) {
  require_format(c, {"text", "json"});
  const int sources = (c.max_p != 0) + !c.table_path.empty() + !c.poly.empty();
  if (sources != 1) throw UsageError("verify needs exactly one of --max-p, --table, --poly");
  if (c.terms < 2) throw UsageError("--terms must be >= 2");

  std::vector<VerificationReport> reports;
  if (!c.poly.empty()) {
    const BoxPolynomial p = parse_wavefunction(c.poly);
    const ClosedFormTable table = derive(weight_form(p).max_q());
    reports = verify_state(p, c.terms, &table);
  } else {
    ClosedFormTable table;
    if (c.max_p != 0) {
      table = derive(c.max_p, derive_options(c));
    } else if (c.table_path == "-") {
      table = table_from_json(read_all(in));
    } else {
      std::ifstream f(c.table_path);
      if (!f) throw UsageError("cannot open " + c.table_path);
      table = table_from_json(read_all(f));
    }
    reports = verify_table(table, c.terms);
  }

  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    if (c.format == "json") {
      out << json{{"target", r.target},
                  {"closed_value", format_double(r.closed_value)},
                  {"partial_sum", format_double(r.partial_sum)},
                  {"tail_bound", format_double(r.tail_bound)},
                  {"residual", format_double(r.residual)},
                  {"pass", r.pass}}
                 .dump()
          << '\n';
    } else {
      out << std::left << std::setw(12) << r.target << " closed " << std::setw(24)
          << format_double(r.closed_value) << " partial " << std::setw(24)
          << format_double(r.partial_sum) << " |diff| " << std::setw(24)
          << format_double(r.residual) << " bound " << std::setw(24)
          << format_double(r.tail_bound + float_slack(r.closed_value)) << (r.pass ? " PASS" : " FAIL")
          << '\n';
    }
  }
  return all_pass ? kOk : kFailed;
}

int cmd_classify(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  std::vector<DegreeClassification> rows;
  if (c.degree != 0) {
    rows.push_back(classify(c.degree));
  } else {
    for (int d = 2; d <= c.max_degree; ++d) rows.push_back(classify(d));
  }
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"degree", r.degree}, {"p", r.attainable_p}});
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << "degree " << r.degree << ": p =";
      for (const int p : r.attainable_p) out << ' ' << p;
      out << '\n';
    }
  }
  return kOk;
}

int cmd_samples(const Config& c, std::ostream& out) {
  require_format(c, {"text", "csv", "json"});
  if (c.points < 2) throw UsageError("--points must be >= 2");
  const auto pts = sample(parse_wavefunction(c.poly), c.points);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& s : pts) {
      arr.push_back({{"x", format_double(s.x.to_double())}, {"psi", format_double(s.psi)}});
    }
    out << arr.dump(2) << '\n';
    return kOk;
  }
  out << (c.format == "csv" ? "x,psi\n" : "");
  for (const auto& s : pts) {
    out << format_double(s.x.to_double()) << (c.format == "csv" ? "," : " ")
        << format_double(s.psi) << '\n';
  }
  return kOk;
}

}  // namespace

std::string table_to_json(const ClosedFormTable& table) { return table_json(table).dump(2); }

ClosedFormTable table_from_json(const std::string& text) {
  ClosedFormTable table;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("table JSON must be an array");
  for (const auto& item : doc) {
    try {
      const SumSymbol s(parse_sum_kind(item.at("kind").get<std::string>()), item.at("p").get<int>());
      if (item.at("pi_power").get<int>() != s.argument()) {
        throw ParseError("pi_power must equal p for " + s.to_string());
      }
      table.set(s, Rational::parse(item.at("coefficient").get<std::string>()),
                item.value("relation_derived", false));
    } catch (const json::exception& e) {
      throw ParseError(std::string("table JSON entry: ") + e.what());
    }
  }
  return table;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"Closed forms of zeta, eta and lambda at even arguments from polynomial states "
               "in an infinite well"};
  app.require_subcommand(1);

  auto* derive_cmd = app.add_subcommand("derive", "Derive exact closed forms up to --max-p");
  derive_cmd->add_option("--max-p", c.max_p, "Largest even argument")->required();
  derive_cmd->add_flag("--use-relations", c.use_relations, "Allow the eta/zeta/lambda relations");
  derive_cmd->add_option("--moment-orders", c.moment_orders, "Moment orders, subset of 0,1,2");
  derive_cmd->add_option("--format", c.format, "text or json");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one polynomial state");
  analyze_cmd->add_option("--poly", c.poly, "Polynomial, e.g. \"x*(1-x)\" or \"0,1,-1\"")->required();
  analyze_cmd->add_option("--format", c.format, "text or json");

  auto* table_cmd = app.add_subcommand("table", "Per-degree table of attainable sums");
  table_cmd->add_option("--max-degree", c.max_degree, "Largest polynomial degree");
  table_cmd->add_option("--format", c.format, "text or json");

  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against partial sums");
  verify_cmd->add_option("--max-p", c.max_p, "Derive up to this argument, then verify");
  verify_cmd->add_option("--table", c.table_path, "JSON table file, or - for stdin");
  verify_cmd->add_option("--poly", c.poly, "Verify the moment series of one state");
  verify_cmd->add_option("--terms", c.terms, "Number of series terms");
  verify_cmd->add_flag("--use-relations", c.use_relations, "Used with --max-p");
  verify_cmd->add_option("--moment-orders", c.moment_orders, "Used with --max-p");
  verify_cmd->add_option("--format", c.format, "text or json");

  auto* classify_cmd = app.add_subcommand("classify", "Attainable arguments per degree");
  classify_cmd->add_option("--degree", c.degree, "Single degree");
  classify_cmd->add_option("--max-degree", c.max_degree, "List degrees 2..max");
  classify_cmd->add_option("--format", c.format, "text or json");

  auto* samples_cmd = app.add_subcommand("samples", "Normalized psi on a uniform grid");
  samples_cmd->add_option("--poly", c.poly, "Polynomial")->required();
  samples_cmd->add_option("--points", c.points, "Number of grid points");
  samples_cmd->add_option("--format", c.format, "text, csv or json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "derive") return cmd_derive(c, out, err);
    if (c.command == "analyze") return cmd_analyze(c, out);
    if (c.command == "table") return cmd_table(c, out);
    if (c.command == "verify") return cmd_verify(c, in, out);
    if (c.command == "classify") return cmd_classify(c, out);
    if (c.command == "samples") return cmd_samples(c, out);
  } catch (const Error& e) {
    const bool usage = dynamic_cast<const UsageError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
                       dynamic_cast<const InvalidDegree*>(&e) || dynamic_cast<const ParseError*>(&e) ||
                       dynamic_cast<const BoundaryViolation*>(&e) ||
                       dynamic_cast<const ZeroPolynomial*>(&e);
    err << (usage ? "usage error: " : "error: ") << e.what() << '\n';
    return usage ? kUsage : kFailed;
  }
  return kUsage;
}

}  // namespace qbox::cli
