#include "smallsort/bench/counter.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#include "smallsort/error.hpp"

#if defined(__linux__)
#include <linux/perf_event.h>
#include <sys/ioctl.h>
#include <sys/syscall.h>
#include <unistd.h>
#define SMALLSORT_HAVE_PERF 1
#endif

namespace smallsort::bench {

std::string_view unit_name(CostUnit unit) {
    switch (unit) {
    case CostUnit::Cycles: return "cycles";
    case CostUnit::Nanoseconds: return "ns";
    case CostUnit::Fake: return "fake";
    }
    return "?";
}

CostUnit parse_unit(std::string_view name) {
    if (name == "cycles") return CostUnit::Cycles;
    if (name == "ns") return CostUnit::Nanoseconds;
    if (name == "fake") return CostUnit::Fake;
    throw ParseError("unknown cost unit '" + std::string(name) + "'");
}

#if SMALLSORT_HAVE_PERF

std::unique_ptr<PerfCounter> PerfCounter::open(PerfEvent event) {
    perf_event_attr attr;
    std::memset(&attr, 0, sizeof(attr));
    attr.type = PERF_TYPE_HARDWARE;
    attr.size = sizeof(attr);
    attr.config = event == PerfEvent::Cycles ? PERF_COUNT_HW_CPU_CYCLES
                                             : PERF_COUNT_HW_BRANCH_MISSES;
    attr.disabled = 1;
    attr.exclude_kernel = 1;
    attr.exclude_hv = 1;
    const long fd = syscall(SYS_perf_event_open, &attr, 0, -1, -1, 0);
    if (fd < 0) return nullptr;
    return std::unique_ptr<PerfCounter>(new PerfCounter(static_cast<int>(fd)));
}

PerfCounter::~PerfCounter() { close(fd_); }

void PerfCounter::start() {
    ioctl(fd_, PERF_EVENT_IOC_RESET, 0);
    ioctl(fd_, PERF_EVENT_IOC_ENABLE, 0);
}

std::int64_t PerfCounter::stop() {
    ioctl(fd_, PERF_EVENT_IOC_DISABLE, 0);
    std::int64_t value = 0;
    if (read(fd_, &value, sizeof(value)) != static_cast<ssize_t>(sizeof(value))) return 0;
    return value;
}

#else

std::unique_ptr<PerfCounter> PerfCounter::open(PerfEvent) { return nullptr; }
PerfCounter::~PerfCounter() = default;
void PerfCounter::start() {}
std::int64_t PerfCounter::stop() { return 0; }

#endif

bool hardware_counter_available(PerfEvent event) {
    return PerfCounter::open(event) != nullptr;
}

CounterChoice parse_counter_choice(std::string_view text) {
    if (text == "cycles") return CounterChoice::Cycles;
    if (text == "clock") return CounterChoice::Clock;
    if (text == "fake") return CounterChoice::Fake;
    throw ParseError("unknown counter '" + std::string(text) + "' (expected cycles, clock or fake)");
}

std::optional<CounterChoice> counter_choice_from_env() {
    const char* value = std::getenv("SMALLSORT_COUNTER");
    if (value == nullptr || *value == '\0') return std::nullopt;
    return parse_counter_choice(value);
}

std::unique_ptr<CostCounter> make_counter(CounterChoice choice) {
    switch (choice) {
    case CounterChoice::Fake: return std::make_unique<FakeCounter>();
    case CounterChoice::Clock: return std::make_unique<ClockCounter>();
    case CounterChoice::Cycles:
        if (auto perf = PerfCounter::open(PerfEvent::Cycles)) return perf;
        return std::make_unique<ClockCounter>();
    }
    return std::make_unique<ClockCounter>();
}

} // namespace smallsort::bench
