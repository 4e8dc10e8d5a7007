#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "signrank/formula.hpp"
#include "signrank/generators.hpp"
#include "signrank/minrank.hpp"
#include "signrank/pattern.hpp"

using namespace signrank;

namespace {

double time_ms(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-38s %10.1f ms %10.1f ms\n", name.c_str(), serial_ms, parallel_ms);
}

}  // namespace

int main() {
    std::printf("%-38s %13s %13s\n", "workload", "serial", "parallel");

    SearchConfig serial = SearchConfig::defaults();
    serial.parallel = false;
    SearchConfig par = SearchConfig::defaults();
    par.parallel = true;

    {
        GenSignPattern b = parse_pattern("+ + 0 0 0\n+ + 0 0 0\n0 + + + 0\n0 0 + 0 +\n");
        double s = time_ms([&] { mr_bounds(b, serial); });
        double p = time_ms([&] { mr_bounds(b, par); });
        row("mr_bounds 4x5 staircase", s, p);
    }
    {
        Rng rng(17);
        std::vector<GenSignPattern> batch;
        for (int i = 0; i < 24; ++i) batch.push_back(random_pattern(rng, 4, 4, 30));
        auto run = [&](const SearchConfig& cfg) {
            for (const auto& m : batch) mr_bounds(m, cfg);
        };
        double s = time_ms([&] { run(serial); });
        double p = time_ms([&] { run(par); });
        row("mr_bounds 24 random 4x4", s, p);
    }
    {
        GenSignPattern d = parse_pattern("+ 0 0\n+ - +\n0 + -\n");
        auto run = [&](const SearchConfig& cfg) { evaluate_mr(d, cfg); };
        double s = time_ms([&] { run(serial); });
        double p = time_ms([&] { run(par); });
        row("evaluate_mr 3x3 with formula", s, p);
    }
    {
        double s = time_ms([&] { cross_validate(3, 3, serial); });
        double p = time_ms([&] { cross_validate(3, 3, par); });
        row("cross_validate 3x3 (2187 cases)", s, p);
    }
    return 0;
}
