#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pbz {

struct FactOutcome {
  bool observed;       // truth value of the claim on the built algebras
  std::string detail;  // witness, embedding or error text
};

// A finite-instance claim about the catalog. A fact passes when the
// observed truth value equals `expected`.
struct Fact {
  std::string id;
  std::string claim;
  bool expected;
  std::function<FactOutcome()> run;
};

const std::vector<Fact>& facts();

struct FactResult {
  const Fact* fact;
  FactOutcome outcome;
  bool pass() const { return outcome.observed == fact->expected; }
};

// Runs one fact, turning exceptions into a failed outcome.
FactResult run_fact(const Fact& fact);

// Writes `FACT <id> PASS|FAIL "<claim>" <detail>` per fact in registry
// order; an empty id runs every fact. Returns the number of failures.
// Throws UnknownName for an unknown id.
std::size_t report_facts(std::ostream& out, std::string_view id = {});

}  // namespace pbz
