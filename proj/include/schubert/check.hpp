#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/ratfunc.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class Status { Pass, Fail, OutOfScope };

std::string to_string(Status s);

// One verified identity instance. A failure always carries a witness: a JSON
// document naming the check, the permutation, the instance and both sides.
struct CheckResult {
    std::string check_id;
    Permutation perm;
    Status status = Status::Pass;
    std::string instance;
    std::string reason;
    std::optional<std::string> witness;
};

// Collects results for one permutation. When `fault` names a check id, the
// left-hand side of every comparison under that id is shifted by one so the
// failure path can be exercised end to end.
class CheckSink {
public:
    explicit CheckSink(Permutation perm, std::string fault = {});

    bool equal(const std::string &id, const std::string &instance, const RatFunc &lhs, const RatFunc &rhs);
    bool truth(const std::string &id, const std::string &instance, bool ok, const std::string &detail = {});
    void out_of_scope(const std::string &id, const std::string &instance, const std::string &reason);

    const Permutation &perm() const { return perm_; }
    std::vector<CheckResult> &results() { return results_; }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    Permutation perm_;
    std::string fault_;
    std::vector<CheckResult> results_;
};

} // namespace schubert
