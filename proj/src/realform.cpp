#include "levi/realform.hpp"

#include <stdexcept>
#include <tuple>

namespace levi {

std::string RealForm::str() const {
  switch (kind) {
    case FormKind::sl_R: return "sl_R(" + std::to_string(q) + ")";
    case FormKind::su: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FormKind::sl_H: return "sl_H(" + std::to_string(p) + ")";
    case FormKind::so_odd:
    case FormKind::so_even:
      return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FormKind::sp2_R: return "sp2_R(" + std::to_string(q) + ")";
    case FormKind::sp2: return "sp2(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FormKind::so_star: return "so*(" + std::to_string(2 * q) + ")";
    case FormKind::exceptional: return ex_name;
    case FormKind::cx: return "complex(" + cx_type.str() + ")";
  }
  return "?";
}

namespace {

std::pair<int, int> parse_pq(const std::string& s, size_t open) {
  auto close = s.find(')', open);
  auto comma = s.find(',', open);
  if (close == std::string::npos || comma == std::string::npos || comma > close)
    throw std::invalid_argument("bad form parameters: " + s);
  int p = std::stoi(s.substr(open + 1, comma - open - 1));
  int q = std::stoi(s.substr(comma + 1, close - comma - 1));
  return {p, q};
}

int parse_single(const std::string& s, size_t open) {
  auto close = s.find(')', open);
  if (close == std::string::npos) throw std::invalid_argument("bad form parameter: " + s);
  return std::stoi(s.substr(open + 1, close - open - 1));
}

}  // namespace

RealForm parse_form(const std::string& s) {
  RealForm f;
  auto starts = [&](const char* pfx) { return s.rfind(pfx, 0) == 0; };
  if (starts("sl_R(")) {
    f.kind = FormKind::sl_R;
    f.q = parse_single(s, 4);
    if (f.q < 2) throw std::invalid_argument("sl_R(n) needs n >= 2");
    return f;
  }
  if (starts("sl_H(")) {
    f.kind = FormKind::sl_H;
    f.p = parse_single(s, 4);
    if (f.p < 1) throw std::invalid_argument("sl_H(m) needs m >= 1");
    return f;
  }
  if (starts("su(")) {
    f.kind = FormKind::su;
    std::tie(f.p, f.q) = parse_pq(s, 2);
  } else if (starts("so*(")) {
    f.kind = FormKind::so_star;
    int n = parse_single(s, 3);
    if (n % 2 || n / 2 < 3) throw std::invalid_argument("so*(2r) needs even argument >= 6");
    f.q = n / 2;
    return f;
  } else if (starts("so(")) {
    int p, q;
    std::tie(p, q) = parse_pq(s, 2);
    f.p = p;
    f.q = q;
    f.kind = (p + q) % 2 ? FormKind::so_odd : FormKind::so_even;
  } else if (starts("sp2_R(")) {
    f.kind = FormKind::sp2_R;
    f.q = parse_single(s, 5);
    if (f.q < 1) throw std::invalid_argument("sp2_R(r) needs r >= 1");
    return f;
  } else if (starts("sp2(")) {
    f.kind = FormKind::sp2;
    std::tie(f.p, f.q) = parse_pq(s, 3);
  } else if (starts("complex(")) {
    f.kind = FormKind::cx;
    auto close = s.find(')');
    f.cx_type = parse_type(s.substr(8, close - 8));
    return f;
  } else {
    static const std::vector<std::pair<std::string, LieType>> ex = {
        {"EI", {Fam::E, 6}},    {"EII", {Fam::E, 6}},  {"EIII", {Fam::E, 6}},
        {"EIV", {Fam::E, 6}},   {"EV", {Fam::E, 7}},   {"EVI", {Fam::E, 7}},
        {"EVII", {Fam::E, 7}},  {"EVIII", {Fam::E, 8}},{"EIX", {Fam::E, 8}},
        {"FI", {Fam::F, 4}},    {"FII", {Fam::F, 4}},  {"G", {Fam::G, 2}},
        {"E6c", {Fam::E, 6}},   {"E7c", {Fam::E, 7}},  {"E8c", {Fam::E, 8}},
        {"F4c", {Fam::F, 4}},   {"G2c", {Fam::G, 2}}};
    for (const auto& [name, type] : ex)
      if (s == name) {
        f.kind = FormKind::exceptional;
        f.ex_name = name;
        f.cx_type = type;
        return f;
      }
    throw std::invalid_argument("unknown real form: " + s);
  }
  if (f.p > f.q) std::swap(f.p, f.q);
  if (f.p < 0 || f.p + f.q < 2) throw std::invalid_argument("bad parameters: " + s);
  return f;
}

LieType complexified_type(const RealForm& f) {
  switch (f.kind) {
    case FormKind::sl_R: return {Fam::A, f.q - 1};
    case FormKind::su: return {Fam::A, f.p + f.q - 1};
    case FormKind::sl_H: return {Fam::A, 2 * f.p - 1};
    case FormKind::so_odd: return {Fam::B, (f.p + f.q - 1) / 2};
    case FormKind::sp2_R: return {Fam::C, f.q};
    case FormKind::sp2: return {Fam::C, f.p + f.q};
    case FormKind::so_even: return {Fam::D, (f.p + f.q) / 2};
    case FormKind::so_star: return {Fam::D, f.q};
    case FormKind::exceptional:
    case FormKind::cx: return f.cx_type;
  }
  throw std::logic_error("unreachable");
}

bool is_compact_form(const RealForm& f) {
  switch (f.kind) {
    case FormKind::su:
    case FormKind::so_odd:
    case FormKind::so_even:
    case FormKind::sp2: return f.p == 0;
    case FormKind::exceptional:
      return f.ex_name.size() >= 2 && f.ex_name.back() == 'c';
    default: return false;
  }
}

ThetaSet theta_of(const RealForm& f) {
  LieType t = complexified_type(f);
  int r = t.rank;
  ThetaSet th;
  auto range = [&](int a, int b) {
    for (int i = a; i <= b; ++i) th.insert(i);
  };
  switch (f.kind) {
    case FormKind::sl_R:
    case FormKind::sp2_R:
      return th;
    case FormKind::su: {
      int n = f.p + f.q;
      if (2 * f.p < n) range(f.p + 1, n - f.p - 1);
      return th;
    }
    case FormKind::sl_H:
      for (int i = 1; i <= r; i += 2) th.insert(i);
      return th;
    case FormKind::so_odd:
      range(f.p + 1, r);
      return th;
    case FormKind::sp2:
      for (int i = 1; i <= r; i += 2) th.insert(i);
      range(2 * f.p + 1, r);
      return th;
    case FormKind::so_even:
      if (f.p == r - 1) return th;
      range(f.p + 1, r);
      return th;
    case FormKind::so_star:
      for (int i = 1; i <= r; i += 2)
        if (i != r) th.insert(i);
      return th;
    case FormKind::cx:
      return th;
    case FormKind::exceptional: {
      if (is_compact_form(f)) {
        range(1, r);
        return th;
      }
      // Blackened Satake nodes, Bourbaki numbering (OV90 Table 9).
      if (f.ex_name == "EIII") return ThetaSet{3, 4, 5};
      if (f.ex_name == "EIV") return ThetaSet{2, 3, 4, 5};
      if (f.ex_name == "EVI") return ThetaSet{2, 5, 7};
      if (f.ex_name == "EVII") return ThetaSet{2, 3, 4, 5};
      if (f.ex_name == "EIX") return ThetaSet{2, 3, 4, 5};
      if (f.ex_name == "FII") return ThetaSet{1, 2, 3};
      // EI, EII, EV, EVIII, FI, G: split or quasi-split.
      return th;
    }
  }
  return th;
}

std::vector<RealForm> forms_of_type(const LieType& t) {
  std::vector<RealForm> out;
  int r = t.rank;
  switch (t.fam) {
    case Fam::A: {
      int n = r + 1;
      for (int p = 0; 2 * p <= n; ++p) {
        RealForm f;
        f.kind = FormKind::su;
        f.p = p;
        f.q = n - p;
        out.push_back(f);
      }
      {
        RealForm f;
        f.kind = FormKind::sl_R;
        f.q = n;
        out.push_back(f);
      }
      if (n % 2 == 0 && n >= 2) {
        RealForm f;
        f.kind = FormKind::sl_H;
        f.p = n / 2;
        out.push_back(f);
      }
      break;
    }
    case Fam::B:
      for (int p = 0; p <= r; ++p) {
        RealForm f;
        f.kind = FormKind::so_odd;
        f.p = p;
        f.q = 2 * r + 1 - p;
        out.push_back(f);
      }
      break;
    case Fam::C: {
      RealForm f;
      f.kind = FormKind::sp2_R;
      f.q = r;
      out.push_back(f);
      for (int p = 0; 2 * p <= r; ++p) {
        RealForm g;
        g.kind = FormKind::sp2;
        g.p = p;
        g.q = r - p;
        out.push_back(g);
      }
      break;
    }
    case Fam::D: {
      for (int p = 0; p <= r; ++p) {
        RealForm f;
        f.kind = FormKind::so_even;
        f.p = p;
        f.q = 2 * r - p;
        out.push_back(f);
      }
      RealForm f;
      f.kind = FormKind::so_star;
      f.q = r;
      out.push_back(f);
      break;
    }
    default:
      throw std::invalid_argument("forms_of_type: classical types only");
  }
  return out;
}

}  // namespace levi
