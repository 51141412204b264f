#include "cqsec/func/builtins.hpp"

#include <algorithm>

namespace cqsec::func {

namespace {

std::string bits(int v, int ell) {
    std::string s(ell, '0');
    for (int i = 0; i < ell; ++i)
        if (v & (1 << (ell - 1 - i))) s[i] = '1';
    return s;
}

void check_id_params(int w_size) {
    if (w_size < 2 || w_size > 8)
        throw ParameterOutOfRange("password alphabet size " + std::to_string(w_size));
}

void check_ot_params(int ell) {
    if (ell < 1 || ell > 3) throw ParameterOutOfRange("string length " + std::to_string(ell));
}

struct KernelBuilder {
    Functionality f;

    void init(int u, int v, int x, int y) {
        f.u_ext.size = u;
        f.v_ext.size = v;
        f.x_out.size = x;
        f.y_out.size = y;
        f.u_honest.assign(u, 0);
        f.v_honest.assign(v, 0);
        f.kernel.assign(static_cast<std::size_t>(u) * v,
                        std::vector<double>(static_cast<std::size_t>(x) * y, 0.0));
    }
    void add(int u, int v, int x, int y, double p) {
        f.kernel[static_cast<std::size_t>(u) * f.v_space() + v][x * f.y_space() + y] += p;
    }
};

Functionality build_id(int w_size) {
    check_id_params(w_size);
    KernelBuilder b;
    b.f.name = "f_id";
    b.f.w_size = w_size;
    b.init(3 * w_size, w_size, 3, 2);
    for (int w = 0; w < w_size; ++w) {
        b.f.u_honest[id_codes::honest(w)] = 1;
        b.f.v_honest[w] = 1;
    }
    for (int v = 0; v < w_size; ++v) {
        for (int w = 0; w < w_size; ++w) {
            int eq = (w == v) ? 1 : 0;
            // honest Alice: no output for her, Bob learns the equality bit
            b.add(id_codes::honest(w), v, id_codes::x_none(), eq, 1.0);
            // dishonest Alice with override bit: she learns the equality bit,
            // Bob gets eq AND d
            for (int d = 0; d < 2; ++d)
                b.add(w_size + 2 * w + d, v, id_codes::x_bit(eq), eq & d, 1.0);
        }
    }
    b.f.u_ext.labels.resize(b.f.u_space());
    for (int w = 0; w < w_size; ++w) {
        b.f.u_ext.labels[w] = "W=" + std::to_string(w);
        for (int d = 0; d < 2; ++d)
            b.f.u_ext.labels[w_size + 2 * w + d] =
                "W=" + std::to_string(w) + ",D=" + std::to_string(d);
    }
    b.f.v_ext.labels.resize(w_size);
    for (int w = 0; w < w_size; ++w) b.f.v_ext.labels[w] = "W=" + std::to_string(w);
    b.f.x_out.labels = {"none", "eq=0", "eq=1"};
    b.f.y_out.labels = {"0", "1"};
    return b.f;
}

Functionality build_id_strict(int w_size) {
    check_id_params(w_size);
    KernelBuilder b;
    b.f.name = "f_id_strict";
    b.f.w_size = w_size;
    b.init(2 * w_size + 1, w_size, 3, 2);
    for (int w = 0; w < w_size; ++w) {
        b.f.u_honest[w] = 1;
        b.f.v_honest[w] = 1;
    }
    for (int v = 0; v < w_size; ++v) {
        for (int w = 0; w < w_size; ++w) {
            int eq = (w == v) ? 1 : 0;
            b.add(w, v, id_strict_codes::x_none(), eq, 1.0);
            // dishonest Alice with a regular password: both learn the bit,
            // no override option
            b.add(w_size + w, v, id_strict_codes::x_bit(eq), eq, 1.0);
        }
        // bot never agrees
        b.add(2 * w_size, v, id_strict_codes::x_bit(0), 0, 1.0);
    }
    b.f.u_ext.labels.resize(b.f.u_space());
    for (int w = 0; w < w_size; ++w) {
        b.f.u_ext.labels[w] = "W=" + std::to_string(w);
        b.f.u_ext.labels[w_size + w] = "W=" + std::to_string(w) + " (dishonest)";
    }
    b.f.u_ext.labels[2 * w_size] = "bot";
    b.f.v_ext.labels.resize(w_size);
    for (int w = 0; w < w_size; ++w) b.f.v_ext.labels[w] = "W=" + std::to_string(w);
    b.f.x_out.labels = {"none", "eq=0", "eq=1"};
    b.f.y_out.labels = {"0", "1"};
    return b.f;
}

Functionality build_12ot(int ell) {
    check_ot_params(ell);
    int n = string_count(ell);
    KernelBuilder b;
    b.f.name = "f_12ot";
    b.f.ell = ell;
    b.init(n * n, 2, 1, n);
    std::fill(b.f.u_honest.begin(), b.f.u_honest.end(), 1);
    b.f.v_honest = {1, 1};
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            for (int c = 0; c < 2; ++c)
                b.add(ot_codes::pair(ell, s0, s1), c, 0, c ? s1 : s0, 1.0);
    b.f.u_ext.labels.resize(n * n);
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            b.f.u_ext.labels[ot_codes::pair(ell, s0, s1)] =
                "S0=" + bits(s0, ell) + ",S1=" + bits(s1, ell);
    b.f.v_ext.labels = {"C=0", "C=1"};
    b.f.x_out.labels = {"none"};
    b.f.y_out.labels.resize(n);
    for (int s = 0; s < n; ++s) b.f.y_out.labels[s] = "Y=" + bits(s, ell);
    return b.f;
}

Functionality build_12rot(int ell) {
    check_ot_params(ell);
    int n = string_count(ell);
    KernelBuilder b;
    b.f.name = "f_12rot";
    b.f.ell = ell;
    b.init(1 + n * n, 2 + 2 * n, n * n + 1, n + 1);
    b.f.u_honest[rot_codes::u_none()] = 1;
    b.f.v_honest[0] = b.f.v_honest[1] = 1;

    double unif_pair = 1.0 / (n * n);
    double unif = 1.0 / n;
    for (int c = 0; c < 2; ++c) {
        // honest-honest: sample both strings, deliver the chosen one
        for (int s0 = 0; s0 < n; ++s0)
            for (int s1 = 0; s1 < n; ++s1)
                b.add(rot_codes::u_none(), c, rot_codes::x_pair(ell, s0, s1),
                      rot_codes::y_string(c ? s1 : s0), unif_pair);
        // dishonest Bob fixes (c, s_c); the other string stays random
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                int s0 = c ? t : s, s1 = c ? s : t;
                b.add(rot_codes::u_none(), rot_codes::v_pair(ell, c, s),
                      rot_codes::x_pair(ell, s0, s1), rot_codes::y_bot(ell), unif);
            }
        // dishonest Alice supplies both strings
        for (int s0 = 0; s0 < n; ++s0)
            for (int s1 = 0; s1 < n; ++s1)
                b.add(rot_codes::u_pair(ell, s0, s1), c, rot_codes::x_bot(ell),
                      rot_codes::y_string(c ? s1 : s0), 1.0);
        // both-dishonest rows are never executed; keep them total
        for (int s = 0; s < n; ++s)
            for (int s0 = 0; s0 < n; ++s0)
                for (int s1 = 0; s1 < n; ++s1)
                    b.add(rot_codes::u_pair(ell, s0, s1), rot_codes::v_pair(ell, c, s),
                          rot_codes::x_bot(ell), rot_codes::y_bot(ell), 1.0);
    }
    b.f.u_ext.labels.resize(b.f.u_space());
    b.f.u_ext.labels[0] = "none";
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            b.f.u_ext.labels[rot_codes::u_pair(ell, s0, s1)] =
                "S0=" + bits(s0, ell) + ",S1=" + bits(s1, ell);
    b.f.v_ext.labels.resize(b.f.v_space());
    b.f.v_ext.labels[0] = "C=0";
    b.f.v_ext.labels[1] = "C=1";
    for (int c = 0; c < 2; ++c)
        for (int s = 0; s < n; ++s)
            b.f.v_ext.labels[rot_codes::v_pair(ell, c, s)] =
                "C=" + std::to_string(c) + ",S=" + bits(s, ell);
    b.f.x_out.labels.resize(b.f.x_space());
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            b.f.x_out.labels[rot_codes::x_pair(ell, s0, s1)] =
                "S0=" + bits(s0, ell) + ",S1=" + bits(s1, ell);
    b.f.x_out.labels[rot_codes::x_bot(ell)] = "none";
    b.f.y_out.labels.resize(b.f.y_space());
    for (int s = 0; s < n; ++s) b.f.y_out.labels[s] = "Y=" + bits(s, ell);
    b.f.y_out.labels[rot_codes::y_bot(ell)] = "none";
    return b.f;
}

Functionality build_12ok(int ell) {
    check_ot_params(ell);
    int n = string_count(ell);
    KernelBuilder b;
    b.f.name = "f_12ok";
    b.f.ell = ell;
    b.init(1 + n * n, 1 + 2 * n, n * n + 1, 2 * n + 1);
    b.f.u_honest[ok_codes::u_none()] = 1;
    b.f.v_honest[ok_codes::v_none()] = 1;

    double unif_all = 1.0 / (2.0 * n * n);
    double unif = 1.0 / n;
    double half = 0.5;
    // honest-honest
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            for (int c = 0; c < 2; ++c)
                b.add(ok_codes::u_none(), ok_codes::v_none(), ok_codes::x_pair(ell, s0, s1),
                      ok_codes::y_pair(ell, c, c ? s1 : s0), unif_all);
    // dishonest Bob fixes (c, s_c)
    for (int c = 0; c < 2; ++c)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                int s0 = c ? t : s, s1 = c ? s : t;
                b.add(ok_codes::u_none(), ok_codes::v_pair(ell, c, s),
                      ok_codes::x_pair(ell, s0, s1), ok_codes::y_bot(ell), unif);
            }
    // dishonest Alice supplies both strings; C still random
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1) {
            for (int c = 0; c < 2; ++c)
                b.add(ok_codes::u_pair(ell, s0, s1), ok_codes::v_none(), ok_codes::x_bot(ell),
                      ok_codes::y_pair(ell, c, c ? s1 : s0), half);
            for (int c = 0; c < 2; ++c)
                for (int s = 0; s < n; ++s)
                    b.add(ok_codes::u_pair(ell, s0, s1), ok_codes::v_pair(ell, c, s),
                          ok_codes::x_bot(ell), ok_codes::y_bot(ell), 1.0);
        }
    b.f.u_ext.labels.resize(b.f.u_space());
    b.f.u_ext.labels[0] = "none";
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            b.f.u_ext.labels[ok_codes::u_pair(ell, s0, s1)] =
                "S0=" + bits(s0, ell) + ",S1=" + bits(s1, ell);
    b.f.v_ext.labels.resize(b.f.v_space());
    b.f.v_ext.labels[0] = "none";
    for (int c = 0; c < 2; ++c)
        for (int s = 0; s < n; ++s)
            b.f.v_ext.labels[ok_codes::v_pair(ell, c, s)] =
                "C=" + std::to_string(c) + ",S=" + bits(s, ell);
    b.f.x_out.labels.resize(b.f.x_space());
    for (int s0 = 0; s0 < n; ++s0)
        for (int s1 = 0; s1 < n; ++s1)
            b.f.x_out.labels[ok_codes::x_pair(ell, s0, s1)] =
                "S0=" + bits(s0, ell) + ",S1=" + bits(s1, ell);
    b.f.x_out.labels[ok_codes::x_bot(ell)] = "none";
    b.f.y_out.labels.resize(b.f.y_space());
    for (int c = 0; c < 2; ++c)
        for (int s = 0; s < n; ++s)
            b.f.y_out.labels[ok_codes::y_pair(ell, c, s)] =
                "C=" + std::to_string(c) + ",Y=" + bits(s, ell);
    b.f.y_out.labels[ok_codes::y_bot(ell)] = "none";
    return b.f;
}

Functionality build_rabin(int ell) {
    check_ot_params(ell);
    int n = string_count(ell);
    KernelBuilder b;
    b.f.name = "f_rabin";
    b.f.ell = ell;
    b.init(1 + n, 1 + n, n + 1, 2 * n);
    b.f.u_honest[rabin_codes::u_none()] = 1;
    b.f.v_honest[rabin_codes::v_none()] = 1;

    double unif = 1.0 / n;
    // honest-honest: X = S, Bob gets (C, C*S)
    for (int s = 0; s < n; ++s)
        for (int c = 0; c < 2; ++c)
            b.add(rabin_codes::u_none(), rabin_codes::v_none(), rabin_codes::x_string(s),
                  rabin_codes::y_pair(ell, c, c ? s : 0), 0.5 * unif);
    // dishonest Bob supplies S: if C=1 Alice gets it, else a fresh string
    for (int s = 0; s < n; ++s) {
        b.add(rabin_codes::u_none(), rabin_codes::v_string(s), rabin_codes::x_string(s),
              rabin_codes::y_pair(ell, 1, s), 0.5);
        for (int t = 0; t < n; ++t)
            b.add(rabin_codes::u_none(), rabin_codes::v_string(s), rabin_codes::x_string(t),
                  rabin_codes::y_pair(ell, 0, 0), 0.5 * unif);
    }
    // dishonest Alice supplies S: no output for her, Bob gets (C, C*S)
    for (int s = 0; s < n; ++s) {
        for (int c = 0; c < 2; ++c)
            b.add(rabin_codes::u_string(s), rabin_codes::v_none(), rabin_codes::x_bot(ell),
                  rabin_codes::y_pair(ell, c, c ? s : 0), 0.5);
        for (int t = 0; t < n; ++t)
            for (int c = 0; c < 2; ++c)
                b.add(rabin_codes::u_string(s), rabin_codes::v_string(t), rabin_codes::x_bot(ell),
                      rabin_codes::y_pair(ell, c, c ? s : 0), 0.5);
    }
    b.f.u_ext.labels.resize(b.f.u_space());
    b.f.u_ext.labels[0] = "none";
    for (int s = 0; s < n; ++s) b.f.u_ext.labels[1 + s] = "S=" + bits(s, ell);
    b.f.v_ext.labels = b.f.u_ext.labels;
    b.f.x_out.labels.resize(b.f.x_space());
    for (int s = 0; s < n; ++s) b.f.x_out.labels[s] = "X=" + bits(s, ell);
    b.f.x_out.labels[n] = "none";
    b.f.y_out.labels.resize(b.f.y_space());
    for (int c = 0; c < 2; ++c)
        for (int s = 0; s < n; ++s)
            b.f.y_out.labels[rabin_codes::y_pair(ell, c, s)] =
                "C=" + std::to_string(c) + ",Y=" + bits(s, ell);
    return b.f;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"f_id", "f_id_strict", "f_12ot", "f_12rot", "f_12ok", "f_rabin"};
}

bool is_builtin_name(const std::string& name) {
    auto names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Functionality get_builtin(const std::string& name, int w_size, int ell) {
    Functionality f;
    if (name == "f_id")
        f = build_id(w_size);
    else if (name == "f_id_strict")
        f = build_id_strict(w_size);
    else if (name == "f_12ot")
        f = build_12ot(ell);
    else if (name == "f_12rot")
        f = build_12rot(ell);
    else if (name == "f_12ok")
        f = build_12ok(ell);
    else if (name == "f_rabin")
        f = build_rabin(ell);
    else
        throw UnknownFunctionality(name);
    f.validate();
    return f;
}

}  // namespace cqsec::func
