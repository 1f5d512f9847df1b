#include "twistcross/report.hpp"

#include <algorithm>
#include <sstream>

namespace twistcross {

Clause& Report::slot(std::string const& name) {
  auto it = std::find_if(clauses_.begin(), clauses_.end(),
                         [&](Clause const& c) { return c.name == name; });
  if (it != clauses_.end()) {
    return *it;
  }
  clauses_.push_back(Clause{name, true, 0, {}});
  return clauses_.back();
}

void Report::check(std::string const& name, bool ok, std::string const& witness) {
  Clause& c = slot(name);
  ++c.checked;
  if (!ok && c.passed) {
    c.passed  = false;
    c.witness = witness;
  }
}

void Report::add(Clause clause) {
  Clause& c = slot(clause.name);
  c.checked += clause.checked;
  if (!clause.passed && c.passed) {
    c.passed  = false;
    c.witness = clause.witness;
  }
}

void Report::merge(Report const& other, std::string const& prefix) {
  for (Clause c : other.clauses()) {
    c.name = prefix + c.name;
    add(std::move(c));
  }
  for (auto const& n : other.notes()) {
    notes_.push_back(prefix + n);
  }
}

bool Report::ok() const {
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [](Clause const& c) { return c.passed; });
}

Clause const* Report::find(std::string const& name) const {
  auto it = std::find_if(clauses_.begin(), clauses_.end(),
                         [&](Clause const& c) { return c.name == name; });
  return it == clauses_.end() ? nullptr : &*it;
}

bool Report::passed(std::string const& name) const {
  Clause const* c = find(name);
  return c != nullptr && c->passed;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject_;
  j["ok"]      = ok();
  j["clauses"] = nlohmann::json::array();
  for (auto const& c : clauses_) {
    nlohmann::json jc{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}};
    if (!c.passed) {
      jc["witness"] = c.witness;
    }
    j["clauses"].push_back(std::move(jc));
  }
  if (!notes_.empty()) {
    j["notes"] = notes_;
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << subject_ << ": " << (ok() ? "PASS" : "FAIL") << '\n';
  for (auto const& c : clauses_) {
    out << "  [" << (c.passed ? "ok " : "BAD") << "] " << c.name << " (" << c.checked
        << ")";
    if (!c.passed) {
      out << "  witness: " << c.witness;
    }
    out << '\n';
  }
  for (auto const& n : notes_) {
    out << "  note: " << n << '\n';
  }
  return out.str();
}

}  // namespace twistcross
