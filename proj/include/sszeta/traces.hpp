#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"

#include <map>
#include <optional>
#include <string>

namespace sszeta {

/// Trace numbers S_n = #X(F_{q^n}) - (q^n + 1), indexed by n. When the genus
/// is known every insertion is checked against the Weil bound
/// S_n^2 <= 4 g^2 q^n (exact integer comparison).
struct TraceSequence {
    Int q;
    std::optional<std::uint64_t> genus;
    std::map<unsigned, Int> values;

    void set(unsigned n, Int s) {
        if (genus) {
            Int bound = Int(4) * Int(*genus) * Int(*genus) * ipow(q, n);
            if (s * s > bound)
                throw math_error("trace S_" + std::to_string(n) + " = " + s.str() +
                                 " violates the Weil bound");
        }
        values[n] = std::move(s);
    }

    const Int& at(unsigned n) const {
        auto it = values.find(n);
        if (it == values.end())
            throw input_error("trace sequence has no entry for n = " + std::to_string(n));
        return it->second;
    }

    bool operator==(const TraceSequence& o) const { return q == o.q && values == o.values; }
};

}  // namespace sszeta
