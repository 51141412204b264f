#pragma once

#include "cqsec/func/functionality.hpp"

namespace cqsec::func {

// Builtin functionality tables. Strings of length ell are coded as integers
// 0..2^ell-1, pairs (a,b) as a*B+b.
//
//   f_id        password identification with the dishonest override bit D
//   f_id_strict the variant without the unfair option; dishonest Alice may
//               also submit bot, and always learns the equality bit
//   f_12ot      regular 1-2 string OT (Alice supplies both strings)
//   f_12rot     sender-randomized 1-2 string OT
//   f_12ok      fully randomized 1-2 string OT ("oblivious key")
//   f_rabin     randomized Rabin OT
//
// Parameters: w_size in [2,8] (f_id variants), ell in [1,3] (OT variants).
Functionality get_builtin(const std::string& name, int w_size = 4, int ell = 2);

bool is_builtin_name(const std::string& name);
std::vector<std::string> builtin_names();

// --- code helpers -----------------------------------------------------------

inline int string_count(int ell) { return 1 << ell; }

namespace id_codes {
// u_ext: [0,W) honest passwords, then W + 2*w + d for the (w, d) pairs
inline int honest(int w) { return w; }
inline int with_override(const Functionality& f, int w, int d) { return f.w_size + 2 * w + d; }
// x_out: 0 = no output, 1 + b = Alice learned equality bit b
inline int x_none() { return 0; }
inline int x_bit(int b) { return 1 + b; }
}  // namespace id_codes

namespace id_strict_codes {
inline int honest(int w) { return w; }
inline int marked(const Functionality& f, int w) { return f.w_size + w; }
inline int bot(const Functionality& f) { return 2 * f.w_size; }
inline int x_none() { return 0; }
inline int x_bit(int b) { return 1 + b; }
}  // namespace id_strict_codes

namespace ot_codes {  // f_12ot
inline int pair(int ell, int s0, int s1) { return s0 * string_count(ell) + s1; }
inline int x_none() { return 0; }
}  // namespace ot_codes

namespace rot_codes {  // f_12rot
inline int u_none() { return 0; }
inline int u_pair(int ell, int s0, int s1) { return 1 + s0 * string_count(ell) + s1; }
inline int v_choice(int c) { return c; }
inline int v_pair(int ell, int c, int s) { return 2 + c * string_count(ell) + s; }
inline int x_pair(int ell, int s0, int s1) { return s0 * string_count(ell) + s1; }
inline int x_bot(int ell) { return string_count(ell) * string_count(ell); }
inline int y_string(int s) { return s; }
inline int y_bot(int ell) { return string_count(ell); }
}  // namespace rot_codes

namespace ok_codes {  // f_12ok
inline int u_none() { return 0; }
inline int u_pair(int ell, int s0, int s1) { return 1 + s0 * string_count(ell) + s1; }
inline int v_none() { return 0; }
inline int v_pair(int ell, int c, int s) { return 1 + c * string_count(ell) + s; }
inline int x_pair(int ell, int s0, int s1) { return s0 * string_count(ell) + s1; }
inline int x_bot(int ell) { return string_count(ell) * string_count(ell); }
inline int y_pair(int ell, int c, int y) { return c * string_count(ell) + y; }
inline int y_bot(int ell) { return 2 * string_count(ell); }
}  // namespace ok_codes

namespace rabin_codes {  // f_rabin
inline int u_none() { return 0; }
inline int u_string(int s) { return 1 + s; }
inline int v_none() { return 0; }
inline int v_string(int s) { return 1 + s; }
inline int x_string(int s) { return s; }
inline int x_bot(int ell) { return string_count(ell); }
// Bob's reply is always the pair (c, c*s); a dishonest Bob who supplied s
// already knows s, so the pair form carries exactly the figure's information.
inline int y_pair(int ell, int c, int y) { return c * string_count(ell) + y; }
}  // namespace rabin_codes

}  // namespace cqsec::func
