#include "dhero/limits.hpp"

#include <cstdlib>
#include <string>

namespace dhero {

namespace {

template <class T>
void override_from(const char* name, T& field) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0') field = static_cast<T>(value);
}

Limits& storage() {
    static Limits l = Limits::from_env();
    return l;
}

}  // namespace

Limits Limits::from_env() {
    Limits l;
    override_from("DHERO_MAX_SOLVER_VERTICES", l.solver_vertices);
    override_from("DHERO_MAX_SOLVER_NODES", l.solver_nodes);
    override_from("DHERO_MAX_FAS_ARCS", l.fas_arcs);
    override_from("DHERO_MAX_CLUSTER_VERTICES", l.cluster_vertices);
    override_from("DHERO_MAX_JEWEL_VERTICES", l.jewel_host_vertices);
    override_from("DHERO_MAX_CANON_PERMUTATIONS", l.canonical_permutations);
    override_from("DHERO_MAX_QT_VERTICES", l.qt_vertices);
    override_from("DHERO_MAX_BOUND_BITS", l.bound_bits);
    return l;
}

const Limits& limits() { return storage(); }

void set_limits(const Limits& l) { storage() = l; }

}  // namespace dhero
