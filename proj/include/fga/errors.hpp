#ifndef FGA_ERRORS_HPP
#define FGA_ERRORS_HPP

// Error taxonomy and search budgets shared by every module.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fga {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid graph construction (disconnected, index out of range, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Malformed `.fg` input; carries the 1-based line number.
struct FormatError : Error {
    int line;
    FormatError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Operation applied outside its mathematical domain (0/0, k=0 scalars, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An exhaustive search exceeded its configured expansion budget.
struct SearchBudgetExceeded : Error {
    explicit SearchBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct NotASplittingVertex : Error {
    explicit NotASplittingVertex(const std::string& msg) : Error(msg) {}
};

// st-core requested for a graph with s != t and no s-t path.  Unreachable
// for validated (connected) graphs; kept as an explicit guard.
struct CoreUndefined : Error {
    explicit CoreUndefined(const std::string& msg) : Error(msg) {}
};

struct UnknownLaw : Error {
    explicit UnknownLaw(const std::string& msg) : Error(msg) {}
};

// Expansion budget charged by backtracking searches.  One Budget instance
// covers one top-level call; searches never silently truncate, they throw.
struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit Budget(std::uint64_t limit_nodes) : limit(limit_nodes) {}

    void charge(std::uint64_t n = 1) {
        used += n;
        if (used > limit)
            throw SearchBudgetExceeded("search expansion budget of " +
                                       std::to_string(limit) + " nodes exceeded");
    }
};

// Default per-call node budget; overridable via FGA_BUDGET_NODES.
inline std::uint64_t default_node_budget() {
    static const std::uint64_t cached = [] {
        if (const char* env = std::getenv("FGA_BUDGET_NODES")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(1000000);
    }();
    return cached;
}

}  // namespace fga

#endif  // FGA_ERRORS_HPP
