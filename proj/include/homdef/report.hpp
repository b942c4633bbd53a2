#pragma once

#include "homdef/tensor.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace homdef {

/// First offending basis triple of a failed identity check, with the exact
/// residual vector. The triple is always the lexicographic minimum so that
/// reports are reproducible goldens. `order` is the deformation order for
/// per-order checks and -1 otherwise.
struct TripleWitness {
    int order = -1;
    std::array<int, 3> triple{};
    Vec<Rational> residual;

    std::string str() const {
        std::ostringstream os;
        if (order >= 0)
            os << "order " << order << ", ";
        os << "triple (" << triple[0] << "," << triple[1] << "," << triple[2] << "), residual "
           << residual.str();
        return os.str();
    }
};

/// Outcome of a single named identity check.
struct CheckReport {
    std::string name;
    bool pass = true;
    long long checked = 0;
    long long failed = 0;
    std::optional<TripleWitness> witness;
    std::string note;

    std::string str() const {
        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << checked << " checked";
        if (failed > 0)
            os << ", " << failed << " failed";
        os << ")";
        if (witness)
            os << "  first failure: " << witness->str();
        if (!note.empty())
            os << "  [" << note << "]";
        return os.str();
    }
};

/// Builds a CheckReport from a residual tensor that must vanish identically.
inline CheckReport report_from_residual(std::string name, const Trilinear& residual,
                                        int order = -1) {
    CheckReport rep;
    rep.name = std::move(name);
    const int n = residual.dim();
    rep.checked = static_cast<long long>(n) * n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<Rational> v = residual.value(i, j, k);
                if (v.is_zero())
                    continue;
                ++rep.failed;
                if (!rep.witness)
                    rep.witness = TripleWitness{order, {i, j, k}, v};
            }
    rep.pass = rep.failed == 0;
    return rep;
}

} // namespace homdef
