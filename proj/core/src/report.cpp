#include "posetcode/report.hpp"

#include <sstream>

#include "json.hpp"

namespace posetcode {

namespace {

std::string witness_u_text(const InstanceResult& row) {
  return row.witness ? row.witness->u.to_string() : "";
}

std::string witness_v_text(const InstanceResult& row) {
  return row.witness ? row.witness->v.to_string() : "";
}

std::string predicted_text(const InstanceResult& row) {
  return row.prediction.minimal ? "minimal" : "not-minimal";
}

std::string verdict_text(const MethodOutcome& outcome) {
  return outcome.result ? std::string(minimality_name(*outcome.result))
                        : "refused";
}

std::string verdicts_cell(const InstanceResult& row) {
  std::string out;
  for (const MethodOutcome& outcome : row.outcomes) {
    if (!out.empty()) out += ';';
    out += method_name(outcome.method);
    out += '=';
    out += verdict_text(outcome);
  }
  return out;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const SweepReport& report, const ReportOptions& options) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const InstanceResult& row : report.instances) {
    nlohmann::ordered_json j;
    j["m"] = row.m;
    j["l"] = row.l;
    j["ideals"] = row.ideals_text();
    j["kind"] = set_kind_name(row.kind);
    j["case"] = case_label_name(row.prediction.label);
    j["condition"] = row.prediction.condition;
    j["predicted"] = predicted_text(row);
    nlohmann::ordered_json verdicts;
    for (const MethodOutcome& outcome : row.outcomes)
      verdicts[std::string(method_name(outcome.method))] =
          verdict_text(outcome);
    j["verdicts"] = verdicts;
    j["witness_u"] = witness_u_text(row);
    j["witness_v"] = witness_v_text(row);
    j["micros"] = options.include_timings ? row.micros : 0;
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

std::string to_csv(const SweepReport& report, const ReportOptions& options) {
  std::string out =
      "m,l,ideals,kind,case,condition,predicted,verdicts,witness_u,witness_v,"
      "micros\n";
  for (const InstanceResult& row : report.instances) {
    out += std::to_string(row.m);
    out += ',';
    out += std::to_string(row.l);
    out += ',';
    out += csv_escape(row.ideals_text());
    out += ',';
    out += set_kind_name(row.kind);
    out += ',';
    out += case_label_name(row.prediction.label);
    out += ',';
    out += csv_escape(row.prediction.condition);
    out += ',';
    out += predicted_text(row);
    out += ',';
    out += csv_escape(verdicts_cell(row));
    out += ',';
    out += witness_u_text(row);
    out += ',';
    out += witness_v_text(row);
    out += ',';
    out += std::to_string(options.include_timings ? row.micros : 0);
    out += '\n';
  }
  return out;
}

std::string to_text_summary(const SweepReport& report) {
  std::ostringstream out;
  for (const InstanceResult& row : report.instances) {
    out << "m=" << row.m << " l=" << row.l
        << " kind=" << set_kind_name(row.kind);
    const std::string ideals = row.ideals_text();
    if (!ideals.empty()) out << " ideals=" << ideals;
    out << " case=" << case_label_name(row.prediction.label)
        << " predicted=" << predicted_text(row);
    for (const MethodOutcome& outcome : row.outcomes)
      out << ' ' << method_name(outcome.method) << '=' << verdict_text(outcome);
    if (row.witness)
      out << " witness_u=" << row.witness->u.to_string()
          << " witness_v=" << row.witness->v.to_string();
    out << (row.mismatched() ? " MISMATCH" : " ok") << '\n';
  }
  out << "instances=" << report.instances.size()
      << " mismatches=" << report.mismatches.size() << '\n';
  return out.str();
}

std::string to_json(const WitnessReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const WitnessCheck& check : report.cases) {
    nlohmann::ordered_json j;
    j["case"] = check.case_label;
    j["m"] = check.m;
    j["l"] = check.l;
    j["kind"] = set_kind_name(check.kind);
    j["ideals"] = check.ideals;
    j["witness_u"] = check.witness.u.to_string();
    j["witness_v"] = check.witness.v.to_string();
    j["h_subset"] = check.h_subset;
    j["cover_holds"] = check.cover_holds;
    j["u_nonzero"] = check.u_nonzero;
    j["v_nonzero"] = check.v_nonzero;
    j["v_distinct"] = check.v_distinct;
    j["h_empty"] = check.h_empty;
    j["passed"] = check.passed;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["cases"] = rows;
  root["all_passed"] = report.all_passed;
  return root.dump(2) + "\n";
}

std::string to_text_summary(const WitnessReport& report) {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const WitnessCheck& check : report.cases) {
    out << check.case_label << " m=" << check.m << " l=" << check.l
        << " kind=" << set_kind_name(check.kind);
    if (!check.ideals.empty()) out << " ideals=" << check.ideals;
    out << " u=" << check.witness.u.to_string()
        << " v=" << check.witness.v.to_string()
        << " h-subset=" << (check.h_subset ? "yes" : "no")
        << " cover=" << (check.cover_holds ? "yes" : "no")
        << " u-nonzero=" << (check.u_nonzero ? "yes" : "no")
        << " v-nonzero=" << (check.v_nonzero ? "yes" : "no")
        << " distinct=" << (check.v_distinct ? "yes" : "no");
    if (check.require_h_empty)
      out << " h-empty=" << (check.h_empty ? "yes" : "no");
    out << " -> " << (check.passed ? "PASS" : "FAIL") << '\n';
    if (!check.passed) ++failures;
  }
  out << "witness-cases=" << report.cases.size() << " failures=" << failures
      << '\n';
  return out.str();
}

}  // namespace posetcode
