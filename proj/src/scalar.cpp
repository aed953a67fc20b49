#include "qgf/scalar.hpp"

namespace qgf {
namespace {

void append_pow(std::string& s, const std::string& name, int pow) {
  if (pow == 0) return;
  s += "*";
  s += name;
  if (pow != 1) s += "^" + std::to_string(pow);
}

std::string coef_str(const Scalar::Coef& c) {
  if (c.im.is_zero()) return c.re.str();
  std::string im = c.im.is_one() ? "j" : (c.im == Rational(-1) ? "-j" : c.im.str() + "*j");
  if (c.re.is_zero()) return im;
  if (im[0] == '-') return c.re.str() + " - " + im.substr(1);
  return c.re.str() + " + " + im;
}

}  // namespace

std::string Scalar::str(const RingSpec& ring) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [p, c] : c_) {
    std::string piece = coef_str(c);
    bool composite = piece.find(' ') != std::string::npos;
    bool neg = !composite && piece[0] == '-';
    std::string body = composite ? "(" + piece + ")" : (neg ? piece.substr(1) : piece);
    std::string powed = body;
    if (p.first != 0 || p.second != 0) {
      if (body == "1") powed.clear();
      std::string tail;
      append_pow(tail, ring.param, p.first);
      append_pow(tail, ring.aux, p.second);
      if (powed.empty()) tail.erase(0, 1);  // drop leading '*'
      powed += tail;
    }
    if (first) {
      out = (neg ? "-" : "") + powed;
    } else {
      out += (neg ? " - " : " + ") + powed;
    }
    first = false;
  }
  return out;
}

}  // namespace qgf
