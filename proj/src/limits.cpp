#include "graphpoly/limits.hpp"

#include <cerrno>
#include <cstdlib>
#include <string>

namespace graphpoly {

namespace {

Limits& mutable_limits() {
    static Limits current;
    return current;
}

void check_cap(const char* name, long long value, long long cap) {
    if (value < 0 || value > cap) {
        throw std::invalid_argument(std::string("limit ") + name + "=" + std::to_string(value) +
                                    " outside [0, " + std::to_string(cap) + "]");
    }
}

template <typename T>
void override_from_env(const char* var, T& field) {
    const char* text = std::getenv(var);
    if (text == nullptr || *text == '\0') return;
    errno = 0;
    char* end = nullptr;
    long long value = std::strtoll(text, &end, 10);
    if (errno != 0 || end == text || *end != '\0') {
        throw std::invalid_argument(std::string("malformed value for ") + var + ": " + text);
    }
    field = static_cast<T>(value);
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) {
    check_cap("canonical_order", l.canonical_order, LimitCaps::canonical_order);
    check_cap("harary_order", l.harary_order, LimitCaps::harary_order);
    check_cap("chromatic_order", l.chromatic_order, LimitCaps::chromatic_order);
    check_cap("tutte_edges", l.tutte_edges, LimitCaps::tutte_edges);
    check_cap("xi_edges", l.xi_edges, LimitCaps::xi_edges);
    check_cap("xi_order", l.xi_order, LimitCaps::xi_order);
    check_cap("subset_order", l.subset_order, LimitCaps::subset_order);
    check_cap("spectrum_order", l.spectrum_order, LimitCaps::spectrum_order);
    check_cap("direct_colorings", l.direct_colorings, LimitCaps::direct_colorings);
    mutable_limits() = l;
}

Limits limits_from_environment() {
    Limits l;
    override_from_env("GRAPHPOLY_CANONICAL_ORDER", l.canonical_order);
    override_from_env("GRAPHPOLY_HARARY_ORDER", l.harary_order);
    override_from_env("GRAPHPOLY_CHROMATIC_ORDER", l.chromatic_order);
    override_from_env("GRAPHPOLY_TUTTE_EDGES", l.tutte_edges);
    override_from_env("GRAPHPOLY_XI_EDGES", l.xi_edges);
    override_from_env("GRAPHPOLY_XI_ORDER", l.xi_order);
    override_from_env("GRAPHPOLY_SUBSET_ORDER", l.subset_order);
    override_from_env("GRAPHPOLY_SPECTRUM_ORDER", l.spectrum_order);
    override_from_env("GRAPHPOLY_DIRECT_COLORINGS", l.direct_colorings);
    return l;
}

void require_within(const char* what, long long value, long long bound) {
    if (value > bound) {
        throw BoundExceeded(std::string(what) + ": " + std::to_string(value) +
                            " exceeds bound " + std::to_string(bound));
    }
}

}  // namespace graphpoly
