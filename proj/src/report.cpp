#include "strcg/report.hpp"

#include <sstream>

namespace strcg {

namespace {

using nlohmann::json;

json witness_to_json(const FailureWitness& witness) {
  if (const auto* iw = std::get_if<IntersectionWitness>(&witness)) {
    return json{{"kind", "intersection"},
                {"I", iw->subset_i},
                {"J", iw->subset_j},
                {"element", iw->element}};
  }
  const auto& pw = std::get<PreconditionWitness>(witness);
  return json{{"kind", "precondition"}, {"detail", pw.detail}};
}

std::string witness_to_text(const FailureWitness& witness) {
  if (const auto* iw = std::get_if<IntersectionWitness>(&witness)) {
    auto subset = [](const std::vector<int>& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
      }
      return out + "}";
    };
    return "intersection failure: I=" + subset(iw->subset_i) + " J=" + subset(iw->subset_j) +
           " element " + iw->element + " lies in <I> ∩ <J> but not in <I∩J>";
  }
  return "precondition failure: " + std::get<PreconditionWitness>(witness).detail;
}

const char* method_name(VerifyMethod m) {
  return m == VerifyMethod::exhaustive ? "exhaustive" : "recursive";
}

const char* direction_name(Direction d) { return d == Direction::left ? "left" : "right"; }

}  // namespace

json report_to_json(const VerificationReport& report) {
  json j;
  j["is_sggi"] = report.is_sggi;
  j["pair_order_table"] = report.pair_order_table;
  j["schlafli"] = report.schlafli ? json(report.schlafli->entries) : json(nullptr);
  j["is_irreducible"] = report.is_irreducible;
  j["is_string_c_group"] = report.is_string_c_group;
  j["method"] = method_name(report.method);
  j["group_order"] = report.group_order ? json(*report.group_order) : json(nullptr);
  j["failure_witness"] =
      report.failure_witness ? witness_to_json(*report.failure_witness) : json(nullptr);
  return j;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "is_sggi: " << (report.is_sggi ? "true" : "false") << "\n";
  if (report.schlafli) out << "schlafli: " << report.schlafli->to_string() << "\n";
  out << "irreducible: " << (report.is_irreducible ? "true" : "false") << "\n";
  out << "pair orders:";
  for (const auto& row : report.pair_order_table) {
    out << "\n ";
    for (auto v : row) out << " " << v;
  }
  out << "\n";
  out << "string C-group: " << (report.is_string_c_group ? "true" : "false")
      << " (method: " << method_name(report.method) << ")\n";
  if (report.group_order) out << "group order: " << *report.group_order << "\n";
  if (report.failure_witness) out << witness_to_text(*report.failure_witness) << "\n";
  return out.str();
}

json outcome_to_json(const ReductionOutcome& outcome) {
  json j;
  j["direction"] = direction_name(outcome.direction);
  j["from_rank"] = outcome.reduced.rank() + 1;
  j["to_rank"] = outcome.reduced.rank();
  j["theorem_condition"] = outcome.theorem_condition;
  j["odd_condition"] = outcome.odd_condition;
  j["group_preserved"] = outcome.group_preserved;
  j["guaranteed"] = outcome.guaranteed;
  j["original_order"] = outcome.original_order;
  j["reduced_order"] = outcome.reduced_order;
  j["reduced_report"] =
      outcome.reduced_report ? report_to_json(*outcome.reduced_report) : json(nullptr);
  json gens = json::array();
  for (int i = 0; i < outcome.reduced.rank(); ++i) {
    gens.push_back(outcome.reduced.generator_string(i));
  }
  j["reduced_generators"] = gens;
  return j;
}

std::string outcome_to_text(const ReductionOutcome& outcome) {
  std::ostringstream out;
  out << "reduction " << direction_name(outcome.direction) << ": rank "
      << outcome.reduced.rank() + 1 << " -> " << outcome.reduced.rank() << "\n";
  out << "  theorem_condition: " << (outcome.theorem_condition ? "true" : "false")
      << "  odd_condition: " << (outcome.odd_condition ? "true" : "false") << "\n";
  out << "  group_preserved: " << (outcome.group_preserved ? "true" : "false")
      << " (order " << outcome.original_order << " -> " << outcome.reduced_order << ")"
      << "  guaranteed: " << (outcome.guaranteed ? "true" : "false") << "\n";
  if (outcome.reduced_report) {
    out << "  reduced verifies: "
        << (outcome.reduced_report->is_string_c_group ? "true" : "false");
    if (outcome.reduced_report->schlafli) {
      out << ", type " << outcome.reduced_report->schlafli->to_string();
    }
    out << "\n";
  }
  return out.str();
}

json chain_to_json(const ReductionChain& chain) {
  json steps = json::array();
  for (const auto& step : chain.steps) steps.push_back(outcome_to_json(step));
  json j;
  j["steps"] = steps;
  j["rejected_step"] =
      chain.rejected_step ? outcome_to_json(*chain.rejected_step) : json(nullptr);
  j["stop_reason"] = chain.stop_reason;
  j["reached_target"] = chain.reached_target;
  return j;
}

std::string chain_to_text(const ReductionChain& chain) {
  std::ostringstream out;
  for (const auto& step : chain.steps) out << outcome_to_text(step);
  if (chain.rejected_step) {
    out << "rejected step:\n" << outcome_to_text(*chain.rejected_step);
  }
  out << "stop: " << chain.stop_reason << "\n";
  return out.str();
}

}  // namespace strcg
