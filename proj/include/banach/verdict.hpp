#pragma once

#include <map>
#include <string>
#include <utility>

namespace banach {

enum class Status { Proved, Refuted, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Proved: return "proved";
        case Status::Refuted: return "refuted";
        default: return "unknown";
    }
}

// Outcome of a decision procedure. `reason` states the mathematical fact the
// verdict rests on (these strings double as the citations in CLI reports);
// `evidence` carries the named numeric certificates backing it.
struct Verdict {
    Status status = Status::Unknown;
    std::string reason;
    std::map<std::string, double> evidence;

    static Verdict proved(std::string why,
                          std::map<std::string, double> ev = {}) {
        return Verdict{Status::Proved, std::move(why), std::move(ev)};
    }
    static Verdict refuted(std::string why,
                           std::map<std::string, double> ev = {}) {
        return Verdict{Status::Refuted, std::move(why), std::move(ev)};
    }
    static Verdict unknown(std::string why,
                           std::map<std::string, double> ev = {}) {
        return Verdict{Status::Unknown, std::move(why), std::move(ev)};
    }

    bool proved_() const { return status == Status::Proved; }
    bool refuted_() const { return status == Status::Refuted; }
    bool unknown_() const { return status == Status::Unknown; }
};

// Joint answer to: is the element invertible / a zero divisor / a
// topological divisor of zero / singular?
struct Classification {
    Verdict regular;
    Verdict zero_divisor;
    Verdict topological_divisor;
    Verdict singular;
};

// Structural facts that hold in any Banach algebra with identity:
// an invertible element is none of the degenerate kinds, and a topological
// divisor of zero is singular. Unknown entries constrain nothing.
inline bool coherent(const Classification& c) {
    if (c.regular.proved_()) {
        if (c.zero_divisor.status == Status::Proved) return false;
        if (c.topological_divisor.status == Status::Proved) return false;
        if (c.singular.status == Status::Proved) return false;
    }
    if (c.topological_divisor.proved_() && c.singular.status != Status::Proved)
        return false;
    if (c.regular.proved_() && c.singular.proved_()) return false;
    return true;
}

}  // namespace banach
