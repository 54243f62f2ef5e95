#include "abelp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "abelp/analyze.hpp"
#include "abelp/dagger.hpp"
#include "abelp/dagger_suite.hpp"
#include "abelp/error.hpp"
#include "abelp/fi_lattice.hpp"
#include "abelp/fundamental_matrix.hpp"
#include "abelp/io/json_io.hpp"
#include "abelp/ulm/ulm.hpp"
#include "abelp/verify.hpp"

namespace abelp {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

std::string subgroup_label(const GroupSpec& g, const std::vector<std::uint32_t>& alpha) {
  const std::string name = fi_subgroup_name(g, alpha);
  return name.empty() ? decomposition_string(g, alpha) : name;
}

bool is_basic_sequence(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) return false;
  for (const auto& b : j.at("blocks")) {
    if (b.is_object() && b.contains("summands")) return true;
  }
  return false;
}

nlohmann::json ulm_document(const nlohmann::json& input) {
  if (!is_basic_sequence(input)) {
    const UlmSequence u = UlmSequence::from_json(input);
    return {{"input", "ulm_sequence"}, {"reports", {check_ulm_criterion(u).to_json()}}};
  }
  const BasicSequence seq = BasicSequence::from_json(input);
  const ClaimReport adm = check_basic_sequence_admissible(seq);
  nlohmann::json doc{{"input", "basic_sequence"}, {"reports", {adm.to_json()}}};
  if (adm.verified()) {
    doc["ulm_sequence"] = basic_seq_to_ulm(seq).to_json();
    doc["reports"].push_back(check_derived_ulm(seq).to_json());
  }
  return doc;
}

}  // namespace

nlohmann::json endo_report(const GroupSpec& spec, const Budget& budget) {
  const GroupPtr g = Group::create(spec, budget);
  const RingPtr ring = make_ring(g);
  nlohmann::json j{{"group", spec.to_string()}, {"ring_order", ring->size()}};
  if (ring->size() > budget.max_ideal_ring) {
    j["ideal_count"] = nullptr;
    j["note"] = "|E| exceeds the ideal-lattice budget; ideals not enumerated";
    return j;
  }
  const DaggerContext ctx = DaggerContext::build(ring);
  j["ideal_count"] = ctx.ideals.size();
  j["fi_subgroup_count"] = ctx.lattice.size();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t h = 0; h < ctx.lattice.size(); ++h) {
    std::size_t members = 0;
    std::size_t closed = 0;
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      if (ctx.ideal_dagger[i] != h) continue;
      ++members;
      if (ctx.node_dagger[ctx.ideal_dagger[i]] == i) ++closed;
    }
    rows.push_back({{"subgroup", subgroup_label(spec, ctx.lattice.alpha[h])},
                    {"alpha", ctx.lattice.alpha[h]},
                    {"order", ctx.lattice.nodes[h].order()},
                    {"class_size", members},
                    {"dagger_order", ctx.ideals[ctx.node_dagger[h]].order()},
                    {"closed_members", closed}});
  }
  j["dagger_inverse_classes"] = rows;
  if (const auto c = find_dagger_collision(ring)) {
    j["collision"] = {{"method", c->method},
                      {"first", ideal_to_json(c->first)},
                      {"second", ideal_to_json(c->second)},
                      {"dagger", subgroup_label(spec, canonical_fi_form(*ring, dagger_ideal(c->first)))}};
  } else {
    j["collision"] = nullptr;
  }
  return j;
}

std::string endo_report_text(const nlohmann::json& r) {
  std::ostringstream os;
  os << "group        " << r.at("group").get<std::string>() << '\n'
     << "|E|          " << r.at("ring_order") << '\n';
  if (r.at("ideal_count").is_null()) {
    os << "ideals       not enumerated (" << r.at("note").get<std::string>() << ")\n";
    return os.str();
  }
  os << "ideals       " << r.at("ideal_count") << '\n'
     << "fi subgroups " << r.at("fi_subgroup_count") << "\n\n";
  std::vector<std::array<std::string, 5>> rows{{"H", "|H|", "|inv class|", "|H+|", "closed"}};
  for (const auto& c : r.at("dagger_inverse_classes")) {
    rows.push_back({c.at("subgroup").get<std::string>(), c.at("order").dump(), c.at("class_size").dump(),
                    c.at("dagger_order").dump(), c.at("closed_members").dump()});
  }
  std::array<std::size_t, 5> w{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " | ";
      line += row[i] + std::string(w[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  if (r.at("collision").is_null()) {
    os << "\nno dagger collision\n";
  } else {
    os << "\ndagger collision (" << r.at("collision").at("method").get<std::string>() << "): two ideals of orders "
       << r.at("collision").at("first").at("order") << " and " << r.at("collision").at("second").at("order")
       << " with dagger " << r.at("collision").at("dagger").get<std::string>() << '\n';
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and claim checks for finite abelian p-groups", "abelp"};
  app.require_subcommand(1);

  Budget budget;
  std::uint64_t max_group = budget.max_elements;
  app.add_option("--max-group", max_group, "Largest |G| to materialize")->capture_default_str();
  app.add_option("--max-ring", budget.max_ring, "Largest |E| to enumerate")->capture_default_str();
  app.add_option("--max-ideals", budget.max_ideal_ring, "Largest |E| whose ideal lattice is built")
      ->capture_default_str();

  std::string input;
  std::string format = "text";
  const auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
  };
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    format = choices.front();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(choices))->capture_default_str();
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Order, Ulm invariants, lattice summary, matrix and indicator table");
  add_input(analyze_cmd, "Group JSON file, or - for stdin");
  add_format(analyze_cmd, {"text", "json"});

  std::vector<std::string> claims;
  bool timing = false;
  std::string allowlist_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the claim suite and print JSON reports sorted by claim id");
  add_input(verify_cmd, "Group JSON file, or - for stdin");
  verify_cmd->add_option("--claims", claims, "Claim ids to run (default: all)")->delimiter(',');
  verify_cmd->add_flag("--timing", timing, "Include per-claim wall time");
  verify_cmd->add_option("--allowlist", allowlist_path, "Replace the built-in known-discrepancy list");
  bool list_claims = false;
  verify_cmd->add_flag("--list", list_claims, "Print the known claim ids and exit");

  auto* lattice_cmd = app.add_subcommand("lattice", "Export the fully invariant subgroup lattice");
  add_input(lattice_cmd, "Group JSON file, or - for stdin");
  std::string lattice_format = "dot";
  lattice_cmd->add_option("--format", lattice_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  auto* endo_cmd = app.add_subcommand("endo", "Endomorphism ring summary and dagger-inverse classes");
  add_input(endo_cmd, "Group JSON file, or - for stdin");
  add_format(endo_cmd, {"text", "json"});

  auto* matrix_cmd = app.add_subcommand("matrix", "Fundamental matrix");
  add_input(matrix_cmd, "Group JSON file, or - for stdin");
  add_format(matrix_cmd, {"text", "json"});

  auto* ulm_cmd = app.add_subcommand("ulm", "Admissibility of a Ulm sequence or a basic sequence");
  add_input(ulm_cmd, "Sequence JSON file, or - for stdin");

  // --list needs no input file.
  verify_cmd->get_option("input")->required(false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  budget.max_elements = max_group;
  budget.max_subgroup = std::min(budget.max_subgroup, max_group);

  try {
    if (verify_cmd->parsed() && list_claims) {
      for (const auto& id : claim_ids()) out << id << '\n';
      return kExitOk;
    }
    if (input.empty()) throw Error(ErrorKind::InvalidInput, "missing input file");
    const nlohmann::json doc = read_json(input);

    if (ulm_cmd->parsed()) {
      out << ulm_document(doc).dump(2) << '\n';
      return kExitOk;
    }

    const GroupSpec spec = group_spec_from_json(doc);
    if (analyze_cmd->parsed()) {
      const Analysis a = analyze(spec, budget);
      out << (format == "json" ? a.to_json().dump(2) + "\n" : a.to_text());
    } else if (verify_cmd->parsed()) {
      const Allowlist allow =
          allowlist_path.empty() ? Allowlist::embedded() : Allowlist::from_json(read_json(allowlist_path));
      const auto reports = run_claims(spec, budget, claims);
      out << verify_document(spec, reports, allow, timing).dump(2) << '\n';
      return has_unexpected_refutation(reports, allow) ? kExitUnexpectedRefutation : kExitOk;
    } else if (lattice_cmd->parsed()) {
      const FILattice lat = enumerate_fi_subgroups(make_ring(Group::create(spec, budget)));
      out << hasse_export(lat, lattice_format);
    } else if (endo_cmd->parsed()) {
      const nlohmann::json r = endo_report(spec, budget);
      out << (format == "json" ? r.dump(2) + "\n" : endo_report_text(r));
    } else if (matrix_cmd->parsed()) {
      const FundMatrix m(Group::create(spec, budget));
      out << (format == "json" ? m.to_json().dump(2) + "\n" : m.render_text());
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "abelp: " << e.what() << '\n';
    return e.is_budget() ? kExitBudget : kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "abelp: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace abelp
