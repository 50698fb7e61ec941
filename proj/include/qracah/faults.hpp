/// Fault injection for mutation testing: flips the sign of one coefficient
/// family so the suite can demonstrate it is not vacuous. Test-only; set
/// before a run and leave constant while checks execute.
#pragma once

namespace qracah {

enum class Fault {
    None,
    FlipPhiPlus,    // negate the recurrence coefficient Phi^+
    FlipFMinus,     // negate F^-
    FlipAPlusPlus,  // negate the A^{+,+} entries
};

void set_active_fault(Fault f);
Fault active_fault();

const char* fault_name(Fault f);

}  // namespace qracah
