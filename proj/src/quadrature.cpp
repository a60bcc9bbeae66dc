#include "linfoot/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "linfoot/error.hpp"

namespace linfoot {

void QuadSpec::validate() const {
    if (!(abs_tol > 0.0)) throw domain_error("QuadSpec: abs_tol must be > 0");
    if (max_subdivisions < 1) throw domain_error("QuadSpec: max_subdivisions must be >= 1");
}

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1,1] (positive half).
const double kXgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322541, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999234, 0.209482141084727828012999174892};
// Gauss weights for nodes kXgk[1,3,5,7].
const double kWg[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816};

struct Panel {
    double ax, bx, ay, by;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

struct Rule {
    double nodes[15];
    double wk[15];
    int gauss_pos[4]; // indices of the embedded Gauss nodes

    Rule() {
        int idx = 0;
        for (int i = 0; i < 7; ++i) {
            nodes[idx] = -kXgk[i];
            wk[idx++] = kWgk[i];
        }
        nodes[idx] = 0.0;
        wk[idx++] = kWgk[7];
        for (int i = 6; i >= 0; --i) {
            nodes[idx] = kXgk[i];
            wk[idx++] = kWgk[i];
        }
        // Gauss subset: odd kXgk indices -> positions 1,3,5 and center 7,
        // mirrored at 9,11,13.
        gauss_pos[0] = 1;
        gauss_pos[1] = 3;
        gauss_pos[2] = 5;
        gauss_pos[3] = 7;
    }
};

const Rule& rule() {
    static const Rule r;
    return r;
}

Panel evaluate_panel(const std::function<double(double, double)>& f,
                     double ax, double bx, double ay, double by) {
    const Rule& r = rule();
    const double hx = 0.5 * (bx - ax), cx = 0.5 * (bx + ax);
    const double hy = 0.5 * (by - ay), cy = 0.5 * (by + ay);
    double vals[15][15];
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            vals[i][j] = f(cx + hx * r.nodes[i], cy + hy * r.nodes[j]);

    double kron = 0.0;
    for (int i = 0; i < 15; ++i) {
        double row = 0.0;
        for (int j = 0; j < 15; ++j) row += r.wk[j] * vals[i][j];
        kron += r.wk[i] * row;
    }
    double gauss = 0.0;
    for (int a = 0; a < 4; ++a) {
        const int i = r.gauss_pos[a];
        const int im = 14 - i;
        double row = 0.0, rowm = 0.0;
        for (int b = 0; b < 4; ++b) {
            const int j = r.gauss_pos[b];
            const int jm = 14 - j;
            const double w = kWg[b];
            row += w * (vals[i][j] + (jm != j ? vals[i][jm] : 0.0));
            rowm += w * (vals[im][j] + (jm != j ? vals[im][jm] : 0.0));
        }
        gauss += kWg[a] * (row + (im != i ? rowm : 0.0));
    }
    const double scale = hx * hy;
    Panel p{ax, bx, ay, by, kron * scale, 0.0};
    p.err = std::fabs((kron - gauss) * scale);
    return p;
}

} // namespace

QuadResult quad2d_result(const std::function<double(double, double)>& f,
                         const QuadSpec& spec) {
    spec.validate();

    std::function<double(double, double)> g;
    if (spec.domain == QuadSpec::Domain::positive_quadrant) {
        // x = s/(1-s), y = t/(1-t); Jacobian 1/((1-s)^2 (1-t)^2).
        g = [&f](double s, double t) {
            const double os = 1.0 - s, ot = 1.0 - t;
            return f(s / os, t / ot) / (os * os * ot * ot);
        };
    } else {
        g = f;
    }

    std::priority_queue<Panel> panels;
    double total = 0.0, total_err = 0.0;
    auto push = [&](Panel p) {
        total += p.value;
        total_err += p.err;
        panels.push(p);
    };
    push(evaluate_panel(g, 0.0, 1.0, 0.0, 1.0));

    int splits = 0;
    while (total_err > spec.abs_tol) {
        if (splits >= spec.max_subdivisions)
            throw convergence_error("quad2d: subdivision limit reached", total, total_err);
        Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mx = 0.5 * (worst.ax + worst.bx);
        const double my = 0.5 * (worst.ay + worst.by);
        push(evaluate_panel(g, worst.ax, mx, worst.ay, my));
        push(evaluate_panel(g, mx, worst.bx, worst.ay, my));
        push(evaluate_panel(g, worst.ax, mx, my, worst.by));
        push(evaluate_panel(g, mx, worst.bx, my, worst.by));
        ++splits;
    }
    if (!std::isfinite(total))
        throw convergence_error("quad2d: non-finite integrand", total, total_err);
    return {total, total_err, static_cast<int>(panels.size())};
}

double quad2d(const std::function<double(double, double)>& f, const QuadSpec& spec) {
    return quad2d_result(f, spec).value;
}

} // namespace linfoot
