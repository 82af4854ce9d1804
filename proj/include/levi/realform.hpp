#pragma once

#include <string>
#include <vector>

#include "levi/rootsys.hpp"

namespace levi {

enum class FormKind {
  sl_R,     // sl_n(R), n >= 2
  su,       // su(p,q), p <= q, p+q >= 2
  sl_H,     // sl_m(H), complexifies to A_{2m-1}
  so_odd,   // so(p,q), p+q odd, p <= q
  sp2_R,    // sp_{2r}(R)
  sp2,      // sp2(p,q), p <= q, complexifies to C_{p+q}
  so_even,  // so(p,q), p+q even, p <= q
  so_star,  // so*(2r)
  exceptional,
  cx,       // complex simple algebra viewed as a real form
};

struct RealForm {
  FormKind kind;
  int p = 0, q = 0;        // as applicable
  std::string ex_name;     // EI..EIX, FI, FII, G, or compact names like "e6", "f4", "g2"
  LieType cx_type{Fam::A, 1};  // used for kind == cx and exceptional

  std::string str() const;
};

RealForm parse_form(const std::string& s);

// Complexified type of the real form.
LieType complexified_type(const RealForm& f);

// Blackened nodes of the Satake diagram as simple-root indices (1-based).
ThetaSet theta_of(const RealForm& f);

bool is_compact_form(const RealForm& f);

// All real forms of a given classical complexified type (used by the sweeps).
std::vector<RealForm> forms_of_type(const LieType& t);

}  // namespace levi
