#pragma once

#include <complex>

namespace dd {

using Cx = std::complex<double>;

struct SeriesControl {
    int max_terms = 20000;
    double abs_tol = 1e-300;
    double rel_tol = 1e-16;
};

// Which evaluation branch a hypergeometric call took.
enum class SeriesPath { Direct, Kummer, Terminating, EulerTerminating, Pfaff, SlowDirect, Connection };

struct SeriesValue {
    Cx value;
    SeriesPath path;
    int terms;

    bool terminating() const {
        return path == SeriesPath::Terminating || path == SeriesPath::EulerTerminating;
    }
};

// True when v is within 1e-9 of an integer m <= 0; m is written if non-null.
bool is_nonpositive_integer(Cx v, int* m = nullptr);

// Principal branch W0 of the Lambert function on [-1/e, inf).
double lambert_w0(double t);
// dW0/dt given w = W0(t).
double lambert_w0_dx(double t, double w);
// W0(exp(s)) and W0(-exp(s)) parameterized by the log of |t|; these stay
// accurate where exp(s) overflows or where -exp(s) approaches -1/e.
double lambert_w0_exp(double s);
double lambert_w0_negexp(double s);

SeriesValue hyp1f1_eval(Cx a, Cx c, Cx z, const SeriesControl& ctl = {});
Cx hyp1f1(Cx a, Cx c, Cx z, const SeriesControl& ctl = {});
Cx hyp1f1_dz(Cx a, Cx c, Cx z, const SeriesControl& ctl = {});
// M(a,c,z)/Gamma(c); finite when c is a nonpositive integer.
SeriesValue hyp1f1_reg_eval(Cx a, Cx c, Cx z, const SeriesControl& ctl = {});
Cx hyp1f1_reg(Cx a, Cx c, Cx z, const SeriesControl& ctl = {});

Cx hyp0f1(Cx c, Cx z, const SeriesControl& ctl = {});
// 0F1(;c;z)/Gamma(c).
Cx hyp0f1_reg(Cx c, Cx z, const SeriesControl& ctl = {});

// one_minus_z, when given, replaces 1 - z in the transformation prefactors
// (pass it when z is within rounding of 1).
SeriesValue hyp2f1_eval(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl = {}, const Cx* one_minus_z = nullptr);
Cx hyp2f1(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl = {});
// Connection-formula branches of hyp2f1_eval, exposed for testing.
SeriesValue hyp2f1_connect_one(Cx a, Cx b, Cx c, Cx one_minus_z, const SeriesControl& ctl = {});
SeriesValue hyp2f1_connect_inf(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl = {});

Cx csqrt(Cx t);
Cx cpow(Cx t, Cx p);
Cx cgamma(Cx z);

}  // namespace dd
