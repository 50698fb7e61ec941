/// Result record for one identity check plus its NDJSON rendering.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qracah/rational.hpp"

namespace qracah {

struct IdentityReport {
    std::string suite;
    std::string identity;
    std::string params;  // parameter fingerprint
    bool pass = true;
    std::optional<std::vector<long>> first_failure;  // index tuple of the first nonzero residual
    std::optional<Rational> residual;                // that residual, exact
    double wall_time = 0.0;                          // milliseconds

    /// One NDJSON line, fields in fixed order. `with_timing=false` drops the
    /// wall_time field (used by the determinism comparison).
    std::string to_json(bool with_timing = true) const;
};

/// Grid scanner: feeds residuals in deterministic index order, remembers the
/// first failure, and never stops early so that one bad tuple cannot mask
/// later ones in diagnostics.
class IdentityScan {
public:
    void expect_zero(std::vector<long> idx, const Rational& residual) {
        if (residual.is_zero()) return;
        ++failures_;
        if (!first_) {
            first_ = std::move(idx);
            residual_ = residual;
        }
    }
    void expect_true(std::vector<long> idx, bool ok) {
        if (!ok) expect_zero(std::move(idx), Rational(1));
    }

    bool pass() const { return failures_ == 0; }
    long failures() const { return failures_; }

    void merge_from(const IdentityScan& other) {
        failures_ += other.failures_;
        if (!first_ && other.first_) {
            first_ = other.first_;
            residual_ = other.residual_;
        }
    }

    IdentityReport finish(std::string suite, std::string identity, std::string params) const {
        IdentityReport r;
        r.suite = std::move(suite);
        r.identity = std::move(identity);
        r.params = std::move(params);
        r.pass = pass();
        if (!r.pass) {
            r.first_failure = first_;
            r.residual = residual_;
        }
        return r;
    }

private:
    long failures_ = 0;
    std::optional<std::vector<long>> first_;
    std::optional<Rational> residual_;
};

}  // namespace qracah
