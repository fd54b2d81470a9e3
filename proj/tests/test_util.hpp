#pragma once

#include <string>
#include <string_view>

// Checks that f() throws E and the message mentions `needle`.
template <class E, class F>
bool throws_with(F&& f, std::string_view needle) {
    try {
        f();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}
