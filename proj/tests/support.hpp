#pragma once

#include <string>

#include "bextlab/report.hpp"

// Kind of the bextlab::Error thrown by f, or "" when nothing is thrown.
template <class F>
std::string error_kind(F&& f)
{
    try {
        f();
    } catch (const bextlab::Error& e) {
        return e.kind();
    }
    return {};
}
