// Cooperative time budgets for long computations.
#pragma once

#include <chrono>

#include "ring.hpp"

namespace germforge {

struct budget_exceeded : error {
    budget_exceeded() : error("time budget exceeded") {}
};

class Budget {
public:
    Budget() = default;
    explicit Budget(double seconds)
        : deadline_(clock::now() + std::chrono::duration_cast<clock::duration>(
                                       std::chrono::duration<double>(seconds))),
          armed_(true)
    {
    }

    void check() const
    {
        if (armed_ && clock::now() > deadline_) throw budget_exceeded();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point deadline_{};
    bool armed_ = false;
};

inline void budget_check(const Budget* b)
{
    if (b) b->check();
}

}  // namespace germforge
