#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bextlab {

// Raised for contract violations. `kind` is the error name used in reports
// and by the CLI (NotAssociative, CoordinateMismatch, ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Search budget shared by every brute-force routine. Read from
// BEXTLAB_MAX_SEARCH, default 2^24.
std::uint64_t max_search();

struct Check {
    std::string id;
    bool pass = true;
    std::string counterexample;
};

struct Report {
    std::vector<Check> checks;

    void add(const std::string& id, bool pass, const std::string& cex = {});
    // Records a failure under `id` unless one is already recorded there.
    void fail(const std::string& id, const std::string& cex);
    void pass(const std::string& id);
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    bool ok(const std::string& id) const;
    const Check* find(const std::string& id) const;
    std::string str() const;
    explicit operator bool() const { return ok(); }
};

std::string tuple_str(std::initializer_list<long long> xs);

}  // namespace bextlab
