#include "schubert/check.hpp"

#include <json.hpp>

namespace schubert {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::OutOfScope:
        return "out_of_scope";
    }
    return "unknown";
}

CheckSink::CheckSink(Permutation perm, std::string fault) : perm_(std::move(perm)), fault_(std::move(fault)) {}

bool CheckSink::equal(const std::string &id, const std::string &instance, const RatFunc &lhs, const RatFunc &rhs)
{
    RatFunc left = id == fault_ ? lhs + RatFunc(1L) : lhs;
    if (left == rhs) {
        results_.push_back({id, perm_, Status::Pass, instance, {}, std::nullopt});
        return true;
    }
    nlohmann::json w = {{"check_id", id},
                        {"perm", perm_.images()},
                        {"instance", instance},
                        {"lhs", left.to_string()},
                        {"rhs", rhs.to_string()}};
    results_.push_back({id, perm_, Status::Fail, instance, "sides differ", w.dump()});
    return false;
}

bool CheckSink::truth(const std::string &id, const std::string &instance, bool ok, const std::string &detail)
{
    if (id == fault_)
        ok = !ok;
    if (ok) {
        results_.push_back({id, perm_, Status::Pass, instance, {}, std::nullopt});
        return true;
    }
    nlohmann::json w = {{"check_id", id}, {"perm", perm_.images()}, {"instance", instance}, {"detail", detail}};
    results_.push_back({id, perm_, Status::Fail, instance, detail.empty() ? "condition violated" : detail, w.dump()});
    return false;
}

void CheckSink::out_of_scope(const std::string &id, const std::string &instance, const std::string &reason)
{
    results_.push_back({id, perm_, Status::OutOfScope, instance, reason, std::nullopt});
}

} // namespace schubert
