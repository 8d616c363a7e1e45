#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

namespace smallsort::bench {

enum class CostUnit { Cycles, Nanoseconds, Fake };

std::string_view unit_name(CostUnit unit);
CostUnit parse_unit(std::string_view name);

//! Measures one start/stop interval.
class CostCounter
{
public:
    virtual ~CostCounter() = default;
    virtual void start() = 0;
    virtual std::int64_t stop() = 0;
    virtual CostUnit unit() const = 0;
};

class ClockCounter final : public CostCounter
{
public:
    void start() override { begin_ = std::chrono::steady_clock::now(); }
    std::int64_t stop() override {
        const auto end = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin_).count();
    }
    CostUnit unit() const override { return CostUnit::Nanoseconds; }

private:
    std::chrono::steady_clock::time_point begin_{};
};

//! Deterministic stand-in. Even-numbered intervals last
//! 2000 + 37 * ((k / 2) mod 11), odd-numbered ones 1000, so a timed loop
//! followed by its baseline always differs by a positive amount.
class FakeCounter final : public CostCounter
{
public:
    void start() override {}
    std::int64_t stop() override {
        const std::int64_t value =
            calls_ % 2 == 0 ? 2000 + 37 * static_cast<std::int64_t>((calls_ / 2) % 11) : 1000;
        ++calls_;
        return value;
    }
    CostUnit unit() const override { return CostUnit::Fake; }

private:
    std::uint64_t calls_ = 0;
};

enum class PerfEvent { Cycles, BranchMisses };

//! Hardware event counter for the calling thread, user space only.
class PerfCounter final : public CostCounter
{
public:
    //! nullptr when the kernel refuses the event (no PMU exposed, paranoid level).
    static std::unique_ptr<PerfCounter> open(PerfEvent event);

    ~PerfCounter() override;
    PerfCounter(const PerfCounter&) = delete;
    PerfCounter& operator=(const PerfCounter&) = delete;

    void start() override;
    std::int64_t stop() override;
    CostUnit unit() const override { return CostUnit::Cycles; }

private:
    explicit PerfCounter(int fd) : fd_(fd) {}
    int fd_;
};

bool hardware_counter_available(PerfEvent event);

enum class CounterChoice { Cycles, Clock, Fake };

CounterChoice parse_counter_choice(std::string_view text);

//! Reads SMALLSORT_COUNTER (cycles|clock|fake) if set.
std::optional<CounterChoice> counter_choice_from_env();

//! Cycles falls back to the clock when no hardware counter can be opened;
//! check unit() of the result.
std::unique_ptr<CostCounter> make_counter(CounterChoice choice);

} // namespace smallsort::bench
