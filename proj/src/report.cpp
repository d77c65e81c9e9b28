#include "bextlab/report.hpp"

#include <cstdlib>
#include <sstream>

namespace bextlab {

std::uint64_t max_search()
{
    const char* env = std::getenv("BEXTLAB_MAX_SEARCH");
    if (env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 24;
}

void Report::add(const std::string& id, bool ok_, const std::string& cex)
{
    for (auto& c : checks) {
        if (c.id == id) {
            if (c.pass && !ok_) {
                c.pass = false;
                c.counterexample = cex;
            }
            return;
        }
    }
    checks.push_back({id, ok_, ok_ ? std::string{} : cex});
}

void Report::fail(const std::string& id, const std::string& cex) { add(id, false, cex); }
void Report::pass(const std::string& id) { add(id, true); }

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks) add(prefix + c.id, c.pass, c.counterexample);
}

bool Report::ok() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

bool Report::ok(const std::string& id) const
{
    const Check* c = find(id);
    return c && c->pass;
}

const Check* Report::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string Report::str() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass " : "FAIL ") << c.id;
        if (!c.pass && !c.counterexample.empty()) os << " at " << c.counterexample;
        os << '\n';
    }
    return os.str();
}

std::string tuple_str(std::initializer_list<long long> xs)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (long long x : xs) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace bextlab
