#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maninalg/rewrite.hpp"

namespace manin {

// Symplectic pairing data for poisson_symplectic presets: generators split
// into positions xs and momenta ps with {p_i, x_i} = 1.
struct PoissonStructure {
    std::vector<GenId> xs;
    std::vector<GenId> ps;
};

// A quotient algebra: generator alphabet with a confluent straightening
// system, plus flags the operations need (q-deformation, commutativity,
// Poisson data). Immutable after construction; shared by pointer identity.
class Ring {
public:
    Ring(std::string descriptor, std::vector<GenInfo> alphabet,
         std::vector<RewriteRule> rules, bool q_ring = false,
         bool commutative = false)
        : descriptor_(std::move(descriptor)),
          rw_(std::move(alphabet), std::move(rules), q_ring),
          q_ring_(q_ring),
          commutative_(commutative) {}

    const std::string& descriptor() const { return descriptor_; }
    const RewriteSystem& rewriter() const { return rw_; }
    bool is_q_ring() const { return q_ring_; }
    bool is_commutative() const { return commutative_; }

    std::size_t generator_count() const { return rw_.generator_count(); }
    const std::string& gen_name(GenId g) const { return rw_.gen_name(g); }

    GenId gen(const std::string& name) const {
        int i = rw_.gen_index(name);
        if (i < 0)
            throw precondition_error("no generator '" + name + "' in ring " + descriptor_);
        return static_cast<GenId>(i);
    }

    bool has_gen(const std::string& name) const { return rw_.gen_index(name) >= 0; }

    const std::optional<PoissonStructure>& poisson() const { return poisson_; }
    void set_poisson(PoissonStructure p) { poisson_ = std::move(p); }

private:
    std::string descriptor_;
    RewriteSystem rw_;
    bool q_ring_;
    bool commutative_;
    std::optional<PoissonStructure> poisson_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline std::string grid_name(const std::string& prefix, int i, int j) {
    return prefix + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        throw ring_mismatch_error("operands live in different rings: " +
                                  a->descriptor() + " vs " + b->descriptor());
}

} // namespace manin
