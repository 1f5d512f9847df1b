#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistcross {

// One checked condition: its verdict, how many instances were examined and,
// on failure, the first counterexample found.
struct Clause {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
};

// Verdict list produced by every verifier. Failures are content, not errors.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  // Records one instance of `name`. The first failing instance keeps its
  // witness; later ones only bump the counter.
  void check(std::string const& name, bool ok, std::string const& witness = {});

  // Records a clause with a precomputed verdict.
  void add(Clause clause);

  void note(std::string text) { notes_.push_back(std::move(text)); }

  // Appends all clauses of `other`, prefixing their names.
  void merge(Report const& other, std::string const& prefix = {});

  bool ok() const;
  Clause const* find(std::string const& name) const;
  bool passed(std::string const& name) const;

  std::string const&              subject() const { return subject_; }
  std::vector<Clause> const&      clauses() const { return clauses_; }
  std::vector<std::string> const& notes() const { return notes_; }

  nlohmann::json to_json() const;
  std::string    to_text() const;

 private:
  Clause& slot(std::string const& name);

  std::string              subject_;
  std::vector<Clause>      clauses_;
  std::vector<std::string> notes_;
};

}  // namespace twistcross
