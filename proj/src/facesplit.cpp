#include "rankdrop/facesplit.hpp"

#include "rankdrop/error.hpp"

namespace rankdrop {

QMatrix build_z(const Config& c) {
    if (c.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "a configuration needs at least one pair");
    }
    QMatrix z(c.size(), 9);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                z.at(i, 3 * a + b) = c[i].x[a] * c[i].y[b];
            }
        }
    }
    return z;
}

QMatrix build_z_p1(const ConfigP1& c) {
    if (c.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "a configuration needs at least one pair");
    }
    QMatrix z(c.size(), 4);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                z.at(i, 2 * a + b) = c[i].x[a] * c[i].y[b];
            }
        }
    }
    return z;
}

QMatrix build_z_line(const std::vector<PointP2>& xs, const std::vector<PointP1>& ys) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw Error(ErrorKind::DimensionMismatch, "the two sides must pair up");
    }
    QMatrix z(xs.size(), 6);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                z.at(i, 2 * a + b) = xs[i][a] * ys[i][b];
            }
        }
    }
    return z;
}

std::size_t z_rank(const Config& c) { return rank(build_z(c)); }

bool z_deficient(const Config& c) { return z_rank(c) < c.size(); }

QMatrix unvec(const std::vector<Rat>& v) {
    if (v.size() != 9) {
        throw Error(ErrorKind::DimensionMismatch, "unvec expects a 9-vector");
    }
    QMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m.at(r, c) = v[3 * c + r];
        }
    }
    return m;
}

std::vector<Rat> vec(const QMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "vec expects a 3x3 matrix");
    }
    std::vector<Rat> v(9);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            v[3 * c + r] = m.at(r, c);
        }
    }
    return v;
}

Config transform(const Config& c, const Homography& hx, const Homography& hy) {
    Config out;
    out.reserve(c.size());
    for (const PointPair& p : c) {
        out.push_back({hx.apply(p.x), hy.apply(p.y)});
    }
    return out;
}

namespace {

// A homography whose third row is the given line, completed by two standard
// basis vectors; it sends the line to "last coordinate zero".
Homography line_to_infinity(const PointP2& line) {
    std::size_t k = 0;
    while (line[k] == 0) {
        ++k;
    }
    std::size_t a = k == 0 ? 1 : 0;
    std::size_t b = k == 2 ? 1 : 2;
    QMatrix m(3, 3);
    m.at(0, a) = 1;
    m.at(1, b) = 1;
    for (std::size_t j = 0; j < 3; ++j) {
        m.at(2, j) = line[j];
    }
    return Homography(m);
}

Homography finite_mover(const std::vector<PointP2>& points) {
    for (std::size_t index = 0;; ++index) {
        // Try the "line at infinity" itself first, so configurations that are
        // already finite are left alone.
        PointP2 line = PointP2(0, 0, 1);
        if (index > 0) {
            auto t = small_height_triple(index - 1);
            line = PointP2(Rat(t[0]), Rat(t[1]), Rat(t[2]));
        }
        bool avoids = true;
        for (const PointP2& p : points) {
            if (line[0] * p[0] + line[1] * p[1] + line[2] * p[2] == 0) {
                avoids = false;
                break;
            }
        }
        if (avoids) {
            return line_to_infinity(line);
        }
    }
}

} // namespace

FiniteForm move_to_finite(const Config& c) {
    std::vector<PointP2> xs;
    std::vector<PointP2> ys;
    for (const PointPair& p : c) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    Homography hx = finite_mover(xs);
    Homography hy = finite_mover(ys);
    return {transform(c, hx, hy), hx, hy};
}

} // namespace rankdrop
