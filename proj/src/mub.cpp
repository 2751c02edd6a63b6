#include "mubcoh/mub.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubcoh/errors.hpp"

namespace mubcoh {

namespace {

// --- polynomial helpers over Z_p, coefficient vectors with constant term first ---

std::vector<int> digits_base_p(int value, int count, int p) {
    std::vector<int> d(count, 0);
    for (int i = 0; i < count; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int poly_degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != 0) return i;
    }
    return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

// Remainder of a mod m, m monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        const int factor = a[da];
        const int shift = da - dm;
        for (int i = 0; i <= dm; ++i) {
            a[i + shift] = ((a[i + shift] - factor * m[i]) % p + p) % p;
        }
    }
    a.resize(dm > 0 ? dm : 1, 0);
    return a;
}

bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    return poly_degree(poly_mod(f, g, p)) < 0;
}

// Monic degree-n polynomial is irreducible iff no monic divisor of degree
// 1..n/2 exists. n is tiny here (p^n <= 49 in supported use).
bool is_irreducible(const std::vector<int>& f, int p) {
    const int n = poly_degree(f);
    for (int m = 1; 2 * m <= n; ++m) {
        int count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (int k = 0; k < count; ++k) {
            std::vector<int> g = digits_base_p(k, m + 1, p);
            g[m] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

bool is_prime(int v) {
    if (v < 2) return false;
    for (int f = 2; f * f <= v; ++f) {
        if (v % f == 0) return false;
    }
    return true;
}

// d = p^n with p prime, or p = 0 if d is not a prime power.
void factor_prime_power(int d, int& p, int& n) {
    p = 0;
    n = 0;
    if (d < 2) return;
    for (int f = 2; f * f <= d; ++f) {
        if (d % f == 0) {
            int m = d, k = 0;
            while (m % f == 0) {
                m /= f;
                ++k;
            }
            if (m == 1) {
                p = f;
                n = k;
            }
            return;
        }
    }
    p = d;  // d itself prime
    n = 1;
}

}  // namespace

GaloisField::GaloisField(int p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw BadDimension("GaloisField: characteristic must be prime");
    if (n < 1) throw BadDimension("GaloisField: degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < n; ++i) q_ *= p;

    modulus_.assign(n + 1, 0);
    modulus_[n] = 1;
    if (n > 1) {
        bool found = false;
        for (int k = 0; k < q_ && !found; ++k) {
            std::vector<int> f = digits_base_p(k, n + 1, p);
            f[n] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) throw Error("GaloisField: no irreducible polynomial found");
    }

    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a) {
        const std::vector<int> pa = digits_base_p(a, n, p);
        for (int b = 0; b < q_; ++b) {
            const std::vector<int> pb = digits_base_p(b, n, p);
            const std::vector<int> r = poly_mod(poly_mul(pa, pb, p), modulus_, p);
            int idx = 0;
            for (int i = n - 1; i >= 0; --i) {
                idx = idx * p + (i < static_cast<int>(r.size()) ? r[i] : 0);
            }
            mul_table_[a * q_ + b] = idx;
        }
    }

    trace_table_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        int acc = 0;  // running sum of Frobenius orbit, as field element
        int x = a;
        for (int i = 0; i < n; ++i) {
            acc = add(acc, x);
            int y = x;
            for (int e = 1; e < p; ++e) y = mul(y, x);  // x^p
            x = y;
        }
        // trace lands in the prime field: acc must be a constant polynomial
        if (acc >= p) throw Error("GaloisField: trace left the prime field");
        trace_table_[a] = acc;
    }
}

int GaloisField::add(int a, int b) const {
    int out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

MubSet MubSet::truncated(int m) const {
    if (m < 1 || m > size()) {
        throw BadIndex("MubSet::truncated: M " + std::to_string(m) + " outside [1, " +
                       std::to_string(size()) + "]");
    }
    MubSet out;
    out.dim = dim;
    out.label = label;
    out.bases.assign(bases.begin(), bases.begin() + m);
    return out;
}

namespace {

MubSet pauli_mubs() {
    const double s = 1.0 / std::sqrt(2.0);
    MubSet set;
    set.dim = 2;
    set.label = "mub_d2";
    CMat z = CMat::Identity(2, 2);
    CMat x(2, 2), y(2, 2);
    x << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
    y << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    set.bases = {Basis{std::move(z)}, Basis{std::move(x)}, Basis{std::move(y)}};
    return set;
}

MubSet wootters_fields(int p, int n) {
    const GaloisField gf(p, n);
    const int q = gf.q();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));

    MubSet set;
    set.dim = q;
    set.label = "mub_d" + std::to_string(q);
    set.bases.reserve(q + 1);
    set.bases.push_back(Basis{CMat::Identity(q, q)});

    for (int t = 0; t < q; ++t) {
        CMat b(q, q);
        for (int j = 0; j < q; ++j) {
            for (int x = 0; x < q; ++x) {
                const int phase = gf.trace(gf.add(gf.mul(t, gf.mul(x, x)), gf.mul(j, x)));
                b(x, j) = std::polar(scale, 2.0 * M_PI * phase / p);
            }
        }
        set.bases.push_back(Basis{std::move(b)});
    }
    return set;
}

}  // namespace

MubSet construct_mub(int d) {
    if (d < 2) {
        throw UnsupportedDimension("construct_mub: d = " + std::to_string(d));
    }
    if (d == 2) return pauli_mubs();
    int p = 0, n = 0;
    factor_prime_power(d, p, n);
    if (p == 0) {
        throw UnsupportedDimension("construct_mub: d = " + std::to_string(d) +
                                   " is not a prime power");
    }
    if (p == 2) {
        throw UnsupportedDimension("construct_mub: even prime power d = " + std::to_string(d) +
                                   " is not constructed (load from file instead)");
    }
    return wootters_fields(p, n);
}

MubVerification verify_mub(const MubSet& set, double tol) {
    if (set.bases.empty()) {
        return MubVerification{0.0, 0.0, true};
    }
    const int d = set.dim;
    for (const Basis& b : set.bases) {
        if (b.dim() != d || b.vectors.cols() != d) {
            throw DimensionMismatch("verify_mub: basis is " + std::to_string(b.vectors.rows()) +
                                    "x" + std::to_string(b.vectors.cols()) + " in dimension " +
                                    std::to_string(d));
        }
    }
    MubVerification rep;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    const int m = set.size();
    for (int s = 0; s < m; ++s) {
        const CMat gram = set.bases[s].vectors.adjoint() * set.bases[s].vectors;
        const double dev = (gram - CMat::Identity(d, d)).cwiseAbs().maxCoeff();
        rep.max_ortho_dev = std::max(rep.max_ortho_dev, dev);
        for (int t = s + 1; t < m; ++t) {
            const CMat cross = set.bases[s].vectors.adjoint() * set.bases[t].vectors;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    rep.max_unbias_dev =
                        std::max(rep.max_unbias_dev, std::abs(std::abs(cross(i, j)) - target));
                }
            }
        }
    }
    rep.pass = rep.max_ortho_dev <= tol && rep.max_unbias_dev <= tol;
    return rep;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

std::string serialize_mub(const MubSet& set) {
    std::string out = "{\n  \"d\": " + std::to_string(set.dim) + ",\n  \"label\": " +
                      nlohmann::json(set.label).dump() + ",\n  \"bases\": [";
    for (int t = 0; t < set.size(); ++t) {
        out += t == 0 ? "\n" : ",\n";
        out += "    [";
        const CMat& v = set.bases[t].vectors;
        for (int j = 0; j < set.dim; ++j) {
            out += j == 0 ? "\n      [" : ",\n      [";
            for (int k = 0; k < set.dim; ++k) {
                out += k == 0 ? "[" : ", [";
                append_double(out, v(k, j).real());
                out += ", ";
                append_double(out, v(k, j).imag());
                out += "]";
            }
            out += "]";
        }
        out += "\n    ]";
    }
    out += "\n  ]\n}\n";
    return out;
}

MubSet parse_mub_json(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("parse_mub_file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("bases") ||
        !doc["d"].is_number_integer() || !doc["bases"].is_array()) {
        throw ParseError("parse_mub_file: expected object with integer \"d\" and array \"bases\"");
    }
    MubSet set;
    set.dim = doc["d"].get<int>();
    if (set.dim < 1) throw ParseError("parse_mub_file: d must be >= 1");
    set.label = doc.value("label", std::string{});
    for (const auto& basis_json : doc["bases"]) {
        if (!basis_json.is_array() || static_cast<int>(basis_json.size()) != set.dim) {
            throw ParseError("parse_mub_file: each basis must hold d vectors");
        }
        CMat v(set.dim, set.dim);
        for (int j = 0; j < set.dim; ++j) {
            const auto& vec_json = basis_json[j];
            if (!vec_json.is_array() || static_cast<int>(vec_json.size()) != set.dim) {
                throw ParseError("parse_mub_file: each vector must hold d components");
            }
            for (int k = 0; k < set.dim; ++k) {
                const auto& entry = vec_json[k];
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                    !entry[1].is_number()) {
                    throw ParseError("parse_mub_file: component must be [re, im]");
                }
                v(k, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
            }
        }
        set.bases.push_back(Basis{std::move(v)});
    }
    if (set.bases.empty()) throw ParseError("parse_mub_file: no bases");
    return set;
}

MubSet parse_mub_file(const std::string& content) {
    MubSet set = parse_mub_json(content);
    const MubVerification rep = verify_mub(set, 1e-6);
    if (!rep.pass) {
        throw NotUnbiased("parse_mub_file: orthonormality dev " +
                          std::to_string(rep.max_ortho_dev) + ", unbiasedness dev " +
                          std::to_string(rep.max_unbias_dev));
    }
    return set;
}

}  // namespace mubcoh
