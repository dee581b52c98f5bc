#include "qbox/render.hpp"

#include <cstdio>
#include <cstdlib>
#include <memory>

#include <mpfr.h>

namespace qbox {

namespace {

constexpr const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679";

constexpr mpfr_prec_t kPrecisionBits = 384;

// RAII over mpfr_t.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kPrecisionBits); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void assign(BigFloat& out, const Rational& r) {
  BigFloat den;
  mpfr_set_z(out.get(), r.raw().get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.get(), r.raw().get_den_mpz_t(), MPFR_RNDN);
  mpfr_div(out.get(), out.get(), den.get(), MPFR_RNDN);
}

void assign(BigFloat& out, const PiScaled& value) {
  assign(out, value.coefficient());
  if (value.pi_power() == 0) return;
  BigFloat pi;
  mpfr_set_str(pi.get(), kPiDigits, 10, MPFR_RNDN);
  mpfr_pow_ui(pi.get(), pi.get(), static_cast<unsigned long>(value.pi_power()), MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), pi.get(), MPFR_RNDN);
}

std::string render(BigFloat& v, int digits) {
  if (mpfr_zero_p(v.get())) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v.get(), MPFR_RNDN),
      mpfr_free_str);
  std::string s(raw.get());
  std::string sign;
  if (s.front() == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  // s holds `digits` mantissa digits; value = 0.s * 10^exp10.
  if (exp10 > 0 && exp10 <= digits) {
    std::string out = s.substr(0, static_cast<std::size_t>(exp10));
    if (static_cast<std::size_t>(exp10) < s.size()) out += "." + s.substr(static_cast<std::size_t>(exp10));
    return sign + out;
  }
  if (exp10 <= 0 && exp10 > -20) {
    return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + s;
  }
  return sign + s.substr(0, 1) + "." + s.substr(1) + "e" + std::to_string(exp10 - 1);
}

}  // namespace

std::string decimal(const PiScaled& value, int digits) {
  BigFloat v;
  assign(v, value);
  return render(v, digits);
}

std::string decimal(const Rational& value, int digits) { return decimal(PiScaled(value, 0), digits); }

double to_double(const PiScaled& value) {
  BigFloat v;
  assign(v, value);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

double pi_power(int power) {
  BigFloat pi;
  mpfr_set_str(pi.get(), kPiDigits, 10, MPFR_RNDN);
  mpfr_pow_si(pi.get(), pi.get(), power, MPFR_RNDN);
  return mpfr_get_d(pi.get(), MPFR_RNDN);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qbox
