#include "sdsearch/f4.hpp"

#include "sdsearch/errors.hpp"

namespace sdsearch {

F4 F4::from_char(char c) {
  switch (c) {
    case '0':
      return zero();
    case '1':
      return one();
    case 'w':
      return omega();
    case 'W':
      return omega_bar();
    default:
      throw InputError(std::string("not a GF(4) symbol: '") + c + "'");
  }
}

F4 F4::inverse() const {
  if (is_zero()) throw InputError("zero has no inverse");
  // The nonzero elements form a cyclic group of order 3: x^-1 = x^2.
  return conj();
}

F4Vec F4Vec::from_string(std::string_view text) {
  F4Vec v;
  if (text.size() > BitVec::kBits) throw InputError("GF(4) vector too long");
  for (std::size_t i = 0; i < text.size(); ++i) v.set(i, F4::from_char(text[i]));
  return v;
}

F4Vec F4Vec::scaled(F4 s) const {
  switch (s.code()) {
    case 0:
      return {};
    case 1:
      return *this;
    case 2:
      return {hi, lo ^ hi};
    default:
      return {lo ^ hi, lo};
  }
}

std::string F4Vec::to_string(std::size_t length) const {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) s[i] = at(i).to_char();
  return s;
}

F4 hermitian_product(const F4Vec& x, const F4Vec& y) {
  const int lo = ((x.lo & (y.lo ^ y.hi)).popcount() + (x.hi & y.hi).popcount()) & 1;
  const int hi = ((x.lo & y.hi).popcount() + (x.hi & y.lo).popcount()) & 1;
  return F4(static_cast<std::uint8_t>(lo | (hi << 1)));
}

}  // namespace sdsearch
