#pragma once

#include <functional>
#include <string>
#include <vector>

namespace moyal::corpus {

/// How the engine value is compared with the printed equation.
enum class Compare {
  exact,            // equal canonical values
  scalar_multiple,  // equal up to a nonzero rational factor
  semantic,         // equal after evaluating generators as concrete
                    // polynomials with zero-constant antiderivatives
};

/// Expected relation between engine and print.
enum class Status {
  match,           // print agrees with the derivation
  confirmed_typo,  // print is wrong; the derived form is authoritative
};

/// One regression row: an engine recipe, its frozen canonical output, and
/// the printed form of the same object in the source article (empty when
/// the print is too garbled to transcribe).
struct Entry {
  std::string id;
  std::string location;
  std::function<std::string()> engine;
  std::string pinned;
  std::string printed;
  Compare compare = Compare::exact;
  Status status = Status::match;
  std::string note;
};

const std::vector<Entry>& entries();

struct Outcome {
  const Entry* entry = nullptr;
  bool regression_ok = false;  // engine output matches the pinned string
  bool printed_ok = false;     // print comparison consistent with status
  std::string engine_value;

  bool pass() const { return regression_ok && printed_ok; }
};

Outcome run_entry(const Entry& e);
std::vector<Outcome> run_all();

}  // namespace moyal::corpus
