#ifndef KOSTKA_BUDGETS_HPP
#define KOSTKA_BUDGETS_HPP

#include <cstdlib>
#include <string>

namespace kostka {

// Resource caps checked before work starts. Defaults are generous for the
// shipped test sizes; each can be overridden by environment variable.
struct Budgets {
    // |W| cap for the closed-form character table route (KOSTKA_BUDGET_GROUP).
    long group_order = 1000000;
    // |W| cap for the explicit element enumeration (KOSTKA_BUDGET_BRUTE).
    long brute_force_order = 100000;
    // Cap on stored monomials in one block character (KOSTKA_BUDGET_MONOMIALS).
    long monomials = 1000000;
    // Cap on |mu| * N for a Macdonald polynomial request (KOSTKA_BUDGET_WEIGHT).
    long macdonald_weight = 4096;

    static Budgets from_env() {
        Budgets b;
        auto read = [](const char* name, long& slot) {
            if (const char* v = std::getenv(name)) {
                long parsed = std::strtol(v, nullptr, 10);
                if (parsed > 0) slot = parsed;
            }
        };
        read("KOSTKA_BUDGET_GROUP", b.group_order);
        read("KOSTKA_BUDGET_BRUTE", b.brute_force_order);
        read("KOSTKA_BUDGET_MONOMIALS", b.monomials);
        read("KOSTKA_BUDGET_WEIGHT", b.macdonald_weight);
        return b;
    }
};

} // namespace kostka

#endif
