#include <algorithm>
#include <sstream>

#include "modvar/checker.hpp"

namespace modvar {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Modular:
      return "Modular";
    case Status::NotModular:
      return "NotModular";
    case Status::Gap:
      return "Gap";
    case Status::BoundedOnly:
      return "BoundedOnly";
  }
  return "BoundedOnly";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::A:
      return "a";
    case Condition::B:
      return "b";
    case Condition::C:
      return "c";
    case Condition::CPrime:
      return "c'";
  }
  return "a";
}

namespace {

std::vector<std::string> display_names(std::size_t count) {
  static constexpr char const* base[] = {"x", "y", "z", "t", "u", "v", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(i < 7 ? base[i] : "x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace

std::string display(Word const& w) {
  LetterTable table;
  Letter top = 0;
  for (auto l : w.letters()) {
    top = std::max(top, l);
  }
  for (auto const& n : display_names(top + 1u)) {
    table.intern(n);
  }
  return to_string(w, table);
}

std::string display(Subgroup const& h) {
  std::string out = "order " + std::to_string(h.order());
  auto const gens = h.generators();
  if (gens.empty()) {
    return out + ", trivial";
  }
  auto const names = display_names(h.degree());
  out += ", generated by ";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i ? ", " : "") + gens[i].to_string(names);
  }
  return out;
}

namespace {

nlohmann::json witness_json(Witness const& w) {
  nlohmann::json words = nlohmann::json::array();
  for (auto const& u : w.words) {
    words.push_back(display(u));
  }
  nlohmann::json stabs = nlohmann::json::array();
  for (auto const& s : w.stabilizers) {
    stabs.push_back(display(s));
  }
  return {{"condition", to_string(w.condition)},
          {"words", words},
          {"stabilizers", stabs},
          {"note", w.note}};
}

nlohmann::json condition_json(ConditionResult const& r) {
  nlohmann::json out = {{"evaluated", r.evaluated},
                        {"passed", r.passed},
                        {"checked", r.checked}};
  out["witness"] = r.witness ? witness_json(*r.witness) : nlohmann::json();
  return out;
}

std::string condition_line(ConditionResult const& r) {
  std::string line = "condition (" + std::string(to_string(r.condition)) + "): ";
  if (!r.evaluated) {
    return line + "not evaluated";
  }
  if (r.passed) {
    return line + "holds (" + std::to_string(r.checked) + " checked)";
  }
  line += "fails";
  if (r.witness) {
    line += ", ";
    for (std::size_t i = 0; i < r.witness->words.size(); ++i) {
      line += (i ? " vs " : "") + display(r.witness->words[i]);
    }
    line += ": " + r.witness->note;
    for (auto const& s : r.witness->stabilizers) {
      line += "\n    stabilizer " + display(s);
    }
  }
  return line;
}

}  // namespace

nlohmann::json to_json(Verdict const& v) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (auto const& w : v.witnesses()) {
    witnesses.push_back(witness_json(w));
  }
  nlohmann::json out = {
      {"status", to_string(v.status)},
      {"mode", v.mode == ClosureMode::Exact ? "exact" : "bounded"},
      {"bound", v.bound},
      {"join", to_string(v.join)},
      {"conditions",
       {{"a", condition_json(v.a)},
        {"b", condition_json(v.b)},
        {"c", condition_json(v.c)},
        {"c_prime", condition_json(v.c_prime)}}},
      {"witnesses", witnesses},
      {"note", v.note},
  };
  out["nil_degree"] = v.nil_degree ? nlohmann::json(*v.nil_degree) : nlohmann::json();
  return out;
}

std::string to_report(Verdict const& v) {
  std::ostringstream out;
  out << to_string(v.status) << '\n';
  out << "closure: " << (v.mode == ClosureMode::Exact ? "exact" : "bounded")
      << ", words up to length " << v.bound;
  if (v.nil_degree) {
    out << ", nilpotency degree " << *v.nil_degree;
  }
  out << '\n';
  if (v.join != JoinFlag::None) {
    out << "joined with " << to_string(v.join)
        << " (does not change the verdict)\n";
  }
  for (auto const* r : {&v.a, &v.b, &v.c, &v.c_prime}) {
    out << condition_line(*r) << '\n';
  }
  if (!v.note.empty()) {
    out << "note: " << v.note << '\n';
  }
  return out.str();
}

}  // namespace modvar
