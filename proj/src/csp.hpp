#pragma once
// Small backtracking solver: slots with finite domains, constraints checked once their last slot is set.

#include <algorithm>
#include <functional>
#include <vector>

namespace skewcat::detail {

class Csp {
public:
    using Pred = std::function<bool(const std::vector<int>&)>;

    int add_slot(std::vector<int> domain) {
        domains_.push_back(std::move(domain));
        return static_cast<int>(domains_.size()) - 1;
    }
    void add_constraint(const std::vector<int>& slots, Pred ok) {
        int last = -1;
        for (int s : slots) last = std::max(last, s);
        if (static_cast<int>(by_last_.size()) <= last + 1) by_last_.resize(last + 2);
        by_last_[last + 1].push_back(std::move(ok));
    }

    // fn returns false to stop. Returns false if stopped early.
    bool solve(const std::function<bool(const std::vector<int>&)>& fn) {
        by_last_.resize(domains_.size() + 1);
        value_.assign(domains_.size(), -1);
        for (auto& p : by_last_[0])
            if (!p(value_)) return true;
        return rec(0, fn);
    }

    int slots() const { return static_cast<int>(domains_.size()); }

private:
    std::vector<std::vector<int>> domains_;
    std::vector<std::vector<Pred>> by_last_;
    std::vector<int> value_;

    bool rec(size_t i, const std::function<bool(const std::vector<int>&)>& fn) {
        if (i == domains_.size()) return fn(value_);
        for (int v : domains_[i]) {
            value_[i] = v;
            bool ok = true;
            for (auto& p : by_last_[i + 1])
                if (!p(value_)) {
                    ok = false;
                    break;
                }
            if (ok && !rec(i + 1, fn)) return false;
        }
        value_[i] = -1;
        return true;
    }
};

}  // namespace skewcat::detail
