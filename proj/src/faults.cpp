#include "qracah/faults.hpp"

#include <atomic>

namespace qracah {

namespace {
std::atomic<Fault> g_fault{Fault::None};
}

void set_active_fault(Fault f) { g_fault.store(f, std::memory_order_relaxed); }
Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }

const char* fault_name(Fault f) {
    switch (f) {
        case Fault::None: return "none";
        case Fault::FlipPhiPlus: return "flip_phi_plus";
        case Fault::FlipFMinus: return "flip_F_minus";
        case Fault::FlipAPlusPlus: return "flip_A_plus_plus";
    }
    return "?";
}

}  // namespace qracah
