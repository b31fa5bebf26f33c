#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ptoral {

enum class Status { pass, fail, cap_exceeded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::cap_exceeded: return "cap-exceeded";
  }
  return "fail";
}

inline std::optional<Status> status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "cap-exceeded") return Status::cap_exceeded;
  return std::nullopt;
}

// Outcome of one named verification.  A failing report always carries a
// counterexample.
struct CheckReport {
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::optional<std::string> counterexample;
  std::int64_t elapsed_ms = 0;
  std::map<std::string, std::uint64_t> caps_used;

  bool passed() const { return status == Status::pass; }

  void witness(std::string w) { witnesses.push_back(std::move(w)); }

  // First failure wins; later ones are kept as witnesses.
  void fail(std::string why) {
    if (status != Status::fail) {
      status = Status::fail;
      counterexample = std::move(why);
    } else {
      witnesses.push_back("also: " + why);
    }
  }

  void cap_hit(std::string why) {
    if (status == Status::pass) {
      status = Status::cap_exceeded;
      counterexample = std::move(why);
    } else {
      witnesses.push_back("cap: " + why);
    }
  }

  // Fold a sub-check into this one, prefixing its witnesses.
  void absorb(const CheckReport& sub) {
    for (const auto& w : sub.witnesses) witnesses.push_back(sub.name + ": " + w);
    for (const auto& [k, v] : sub.caps_used) caps_used[k] = v;
    if (sub.status == Status::fail) fail(sub.name + ": " + sub.counterexample.value_or("failed"));
    if (sub.status == Status::cap_exceeded) cap_hit(sub.name + ": " + sub.counterexample.value_or("cap"));
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ptoral
