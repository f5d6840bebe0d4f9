#include "sqfbrace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "sqfbrace/brace.hpp"
#include "sqfbrace/counting.hpp"
#include "sqfbrace/errors.hpp"
#include "sqfbrace/verify.hpp"

namespace sqfb {

namespace {

using nlohmann::json;

struct RunConfig {
  Int n = 0;
  std::string format = "text";
  std::string strategy = "quintuple";
  std::string m, a;
  int index = 0;
  EnumerationOptions enumeration;
};

json group_json(const GroupDescriptor& G, std::size_t index) {
  return {{"index", index}, {"label", G.label()}, {"d", G.d},         {"e", G.e},
          {"k", G.k},       {"z", G.z()},         {"g", G.g()},       {"aut_order", aut_group_order(G)}};
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool quote = cells[i].find(',') != std::string::npos;
    out << (i ? "," : "") << (quote ? "\"" + cells[i] + "\"" : cells[i]);
  }
  out << "\n";
}

std::vector<Strategy> strategies(const RunConfig& cfg) {
  if (cfg.strategy == "generic") return {Strategy::Generic};
  if (cfg.strategy == "both") return {Strategy::Quintuple, Strategy::Generic};
  return {Strategy::Quintuple};
}

int cmd_groups(const RunConfig& cfg, std::ostream& out) {
  const auto groups = enumerate_groups(cfg.n);
  if (cfg.format == "json") {
    json j{{"n", cfg.n}, {"groups", json::array()}};
    for (std::size_t i = 0; i < groups.size(); ++i) j["groups"].push_back(group_json(groups[i], i));
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    write_csv_row(out, {"index", "label", "d", "e", "k", "z", "g", "aut_order"});
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& G = groups[i];
      write_csv_row(out, {std::to_string(i), G.label(), std::to_string(G.d), std::to_string(G.e),
                          std::to_string(G.k), std::to_string(G.z()), std::to_string(G.g()),
                          std::to_string(aut_group_order(G))});
    }
  } else {
    out << std::left << std::setw(6) << "index" << std::setw(16) << "group" << std::setw(6) << "z"
        << std::setw(6) << "g" << "|Aut|\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& G = groups[i];
      out << std::setw(6) << i << std::setw(16) << G.label() << std::setw(6) << G.z()
          << std::setw(6) << G.g() << aut_group_order(G) << "\n";
    }
  }
  return kOk;
}

void write_matrix(const CountMatrix& cm, const RunConfig& cfg, bool marginals, std::ostream& out) {
  const auto rows = cm.row_totals(), cols = cm.column_totals();
  if (cfg.format == "json") {
    json j{{"n", cm.n}, {"groups", json::array()}, {"matrix", cm.entries}, {"total", cm.total}};
    for (const auto& G : cm.groups) j["groups"].push_back(G.label());
    if (marginals) {
      j["row_totals"] = rows;
      j["column_totals"] = cols;
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (cfg.format == "csv") {
    std::vector<std::string> header{"M\\A"};
    for (const auto& G : cm.groups) header.push_back(G.label());
    if (marginals) header.push_back("total");
    write_csv_row(out, header);
    for (std::size_t i = 0; i < cm.groups.size(); ++i) {
      std::vector<std::string> row{cm.groups[i].label()};
      for (Int x : cm.entries[i]) row.push_back(std::to_string(x));
      if (marginals) row.push_back(std::to_string(rows[i]));
      write_csv_row(out, row);
    }
    if (marginals) {
      std::vector<std::string> row{"total"};
      for (Int x : cols) row.push_back(std::to_string(x));
      row.push_back(std::to_string(cm.total));
      write_csv_row(out, row);
    }
    return;
  }
  std::size_t width = 8;
  for (const auto& G : cm.groups) width = std::max(width, G.label().size() + 2);
  out << std::left << std::setw(static_cast<int>(width)) << "M\\A";
  for (const auto& G : cm.groups) out << std::setw(static_cast<int>(width)) << G.label();
  if (marginals) out << "total";
  out << "\n";
  for (std::size_t i = 0; i < cm.groups.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << cm.groups[i].label();
    for (Int x : cm.entries[i]) out << std::setw(static_cast<int>(width)) << x;
    if (marginals) out << rows[i];
    out << "\n";
  }
  if (marginals) {
    out << std::setw(static_cast<int>(width)) << "total";
    for (Int x : cols) out << std::setw(static_cast<int>(width)) << x;
    out << cm.total << "\n";
  } else {
    out << "total " << cm.total << "\n";
  }
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m.empty() != cfg.a.empty()) throw Error("count needs both --m and --a, or neither");
  if (cfg.m.empty()) {
    write_matrix(count_matrix(cfg.n), cfg, false, out);
    return kOk;
  }
  const auto M = resolve_selector(cfg.n, cfg.m), A = resolve_selector(cfg.n, cfg.a);
  const Int b = count_skew_braces(M, A);
  if (cfg.format == "json") {
    out << json{{"n", cfg.n}, {"m", M.label()}, {"a", A.label()}, {"b", b}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    write_csv_row(out, {"n", "m", "a", "b"});
    write_csv_row(out, {std::to_string(cfg.n), M.label(), A.label(), std::to_string(b)});
  } else {
    out << "b(" << M.label() << ", " << A.label() << ") = " << b << "\n";
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  write_matrix(count_matrix(cfg.n), cfg, true, out);
  return kOk;
}

std::vector<std::pair<GroupDescriptor, GroupDescriptor>> selected_pairs(const RunConfig& cfg) {
  const auto groups = enumerate_groups(cfg.n);
  std::vector<GroupDescriptor> ms = groups, as = groups;
  if (!cfg.m.empty()) ms = {resolve_selector(cfg.n, cfg.m)};
  if (!cfg.a.empty()) as = {resolve_selector(cfg.n, cfg.a)};
  std::vector<std::pair<GroupDescriptor, GroupDescriptor>> pairs;
  for (const auto& A : as)
    for (const auto& M : ms) pairs.emplace_back(M, A);
  return pairs;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  int code = kOk;
  json rows = json::array();
  std::vector<std::string> text;
  for (const auto& [M, A] : selected_pairs(cfg)) {
    const Int formula = count_skew_braces(M, A);
    std::vector<OracleReport> reports;
    std::set<std::vector<std::vector<std::uint64_t>>> key_sets;
    for (Strategy s : strategies(cfg)) {
      auto subs = enumerate_regular_subgroups(M, A, s, cfg.enumeration);
      std::vector<std::vector<std::uint64_t>> keys;
      for (const auto& sub : subs) keys.push_back(sub.key);
      key_sets.insert(keys);
      Holomorph H(A);
      reports.push_back(report_from(M, A, subs, aut_orbits(subs, H)));
    }
    const auto& r = reports.front();
    const bool agree = r.b_oracle == formula && key_sets.size() == 1;
    if (!agree) code = kMismatch;
    rows.push_back({{"m", M.label()},
                    {"a", A.label()},
                    {"b_formula", formula},
                    {"b_oracle", r.b_oracle},
                    {"e_prime", r.e_prime},
                    {"e", r.e},
                    {"orbit_sizes", r.orbit_sizes},
                    {"strategies_agree", key_sets.size() == 1},
                    {"ok", agree}});
    std::ostringstream line;
    line << std::left << std::setw(16) << M.label() << std::setw(16) << A.label() << "b=" << formula
         << " oracle=" << r.b_oracle << " e'=" << r.e_prime << " e=" << r.e << " orbits=[";
    for (std::size_t i = 0; i < r.orbit_sizes.size(); ++i) line << (i ? "," : "") << r.orbit_sizes[i];
    line << "] " << (agree ? "ok" : "MISMATCH");
    text.push_back(line.str());
  }
  if (cfg.format == "json") {
    out << json{{"n", cfg.n}, {"pairs", rows}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    write_csv_row(out, {"m", "a", "b_formula", "b_oracle", "e_prime", "e", "ok"});
    for (const auto& r : rows)
      write_csv_row(out, {r["m"].get<std::string>(), r["a"].get<std::string>(),
                          std::to_string(r["b_formula"].get<Int>()),
                          std::to_string(r["b_oracle"].get<Int>()),
                          std::to_string(r["e_prime"].get<Int>()), std::to_string(r["e"].get<Int>()),
                          r["ok"].get<bool>() ? "true" : "false"});
  } else {
    for (const auto& line : text) out << line << "\n";
  }
  return code;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.enumeration = cfg.enumeration;
  opts.generic = cfg.strategy != "quintuple";
  if (opts.generic && cfg.n > cfg.enumeration.max_generic_n)
    throw BoundExceeded("n = " + std::to_string(cfg.n) + " exceeds the generic bound " +
                        std::to_string(cfg.enumeration.max_generic_n));
  if (cfg.n > cfg.enumeration.max_quintuple_n)
    throw BoundExceeded("n = " + std::to_string(cfg.n) + " exceeds the quintuple bound " +
                        std::to_string(cfg.enumeration.max_quintuple_n));
  const auto result = verify_order(cfg.n, opts);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& p : result.pairs)
      rows.push_back({{"m", p.M.label()},
                      {"a", p.A.label()},
                      {"b_formula", p.formula},
                      {"b_oracle", p.report ? p.report->b_oracle : -1},
                      {"generic_checked", p.generic_checked},
                      {"failures", p.failures}});
    out << json{{"n", cfg.n}, {"ok", result.ok()}, {"pairs", rows}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    write_csv_row(out, {"m", "a", "b_formula", "b_oracle", "failures"});
    for (const auto& p : result.pairs)
      write_csv_row(out, {p.M.label(), p.A.label(), std::to_string(p.formula),
                          std::to_string(p.report ? p.report->b_oracle : -1),
                          std::to_string(p.failures.size())});
  } else {
    for (const auto& p : result.pairs) {
      out << std::left << std::setw(16) << p.M.label() << std::setw(16) << p.A.label()
          << "b=" << p.formula << " oracle=" << (p.report ? p.report->b_oracle : -1)
          << (p.generic_checked ? " generic=yes" : "") << (p.ok() ? " ok" : " FAIL") << "\n";
      for (const auto& f : p.failures) out << "  - " << f << "\n";
    }
    out << (result.ok() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return result.ok() ? kOk : kMismatch;
}

void write_table(std::ostream& out, const std::string& name, const Table& t) {
  out << name << ":\n";
  for (const auto& row : t) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << std::setw(3) << row[i];
    out << "\n";
  }
}

int cmd_brace(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m.empty() || cfg.a.empty()) throw Error("brace needs --m and --a");
  const auto M = resolve_selector(cfg.n, cfg.m), A = resolve_selector(cfg.n, cfg.a);
  const auto braces =
      orbit_representative_braces(M, A, strategies(cfg).front(), cfg.enumeration);
  if (cfg.index < 0 || static_cast<std::size_t>(cfg.index) >= braces.size())
    throw Error("index " + std::to_string(cfg.index) + " out of range: " + std::to_string(braces.size()) +
                " braces for (" + M.label() + ", " + A.label() + ")");
  const auto& B = braces[static_cast<std::size_t>(cfg.index)];
  if (cfg.format == "text") {
    out << "brace " << cfg.index << " of " << braces.size() << " for M = " << M.label()
        << ", A = " << A.label() << "\n";
    write_table(out, "add", B.add);
    write_table(out, "mul", B.mul);
    write_table(out, "lambda", B.lambda);
  } else if (cfg.format == "json") {
    out << brace_to_json(B, 2) << "\n";
  } else {
    throw Error("brace supports --format text or json");
  }
  return kOk;
}

}  // namespace

GroupDescriptor resolve_selector(Int n, const std::string& selector) {
  static const std::regex index_re(R"(\s*(\d+)\s*)");
  static const std::regex triple_re(R"(\s*(?:G\()?\s*(\d+)\s*[:,]\s*(\d+)\s*[:,]\s*(\d+)\s*\)?\s*)");
  std::smatch m;
  if (std::regex_match(selector, m, index_re)) {
    const auto groups = enumerate_groups(n);
    const auto i = std::stoull(m[1]);
    if (i >= groups.size())
      throw Error("group index " + selector + " out of range: " + std::to_string(groups.size()) +
                  " groups of order " + std::to_string(n));
    return groups[i];
  }
  if (std::regex_match(selector, m, triple_re)) {
    auto G = canonicalize(std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]));
    if (G.n != n)
      throw OrderMismatch(G.label() + " has order " + std::to_string(G.n) + ", not " +
                          std::to_string(n));
    return G;
  }
  throw Error("cannot parse group selector '" + selector + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew braces of squarefree order: closed counts and brute-force checks", "sqfbrace"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool selectors) {
    sub->add_option("n", cfg.n, "group order (squarefree)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--strategy", cfg.strategy, "enumeration strategy")
        ->check(CLI::IsMember({"quintuple", "generic", "both"}));
    sub->add_option("--max-generic-n", cfg.enumeration.max_generic_n, "largest n for the generic search");
    sub->add_option("--max-quintuple-n", cfg.enumeration.max_quintuple_n,
                    "largest n for the quintuple search");
    sub->add_option("--workers", cfg.enumeration.workers, "worker threads (0 = all cores)");
    if (selectors) {
      sub->add_option("--m", cfg.m, "multiplicative group: index, d:e:k or G(d,e,k)");
      sub->add_option("--a", cfg.a, "additive group: index, d:e:k or G(d,e,k)");
    }
  };
  auto* groups = app.add_subcommand("groups", "list the groups of order n");
  common(groups, false);
  auto* count = app.add_subcommand("count", "closed-form skew brace counts");
  common(count, true);
  auto* table = app.add_subcommand("table", "count matrix with row and column totals");
  common(table, false);
  auto* oracle = app.add_subcommand("oracle", "brute-force counts from Hol(A)");
  common(oracle, true);
  auto* verify = app.add_subcommand("verify", "compare every closed count with the oracle");
  common(verify, false);
  auto* brace = app.add_subcommand("brace", "dump one skew brace");
  common(brace, true);
  brace->add_option("--index", cfg.index, "orbit index, from 0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!is_squarefree(cfg.n)) throw NotSquarefree(std::to_string(cfg.n) + " is not squarefree");
    if (groups->parsed()) return cmd_groups(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (brace->parsed()) return cmd_brace(cfg, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sqfb
