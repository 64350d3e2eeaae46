#include "scalabfs/perf_model.hpp"

#include <cmath>

#include "scalabfs/crossbar.hpp"

namespace scalabfs {

void PerfParams::validate() const {
    if (n_pe == 0 || n_pc == 0 || sv_bits == 0 || k == 0)
        throw ConfigError("perf model: counts must be positive");
    if (freq_hz <= 0 || bw_max <= 0 || len_nl <= 0)
        throw ConfigError("perf model: rates and Len_nl must be positive");
}

double data_width(std::uint32_t n_pe, std::uint32_t sv_bits) {
    return 2.0 * n_pe * sv_bits;
}

ChannelBw channel_bw(double dw_bits, double freq_hz, double bw_max) {
    double raw = dw_bits / 8.0 * freq_hz;
    if (raw >= bw_max) return {bw_max, true};
    return {raw, false};
}

double neighbor_fraction(double len_nl, std::uint32_t sv_bits, double dw_bits) {
    double nl_bits = len_nl * sv_bits;
    return nl_bits / (dw_bits + nl_bits);
}

double perf_pg(const PerfParams& p) {
    p.validate();
    double dw = data_width(p.n_pe, p.sv_bits);
    ChannelBw bw = channel_bw(dw, p.freq_hz, p.bw_max);
    double p_nl = neighbor_fraction(p.len_nl, p.sv_bits, dw);
    double sv_bytes = p.sv_bits / 8.0;
    return bw.bytes_per_s * p_nl / sv_bytes;
}

double perf_total(const PerfParams& p) { return perf_pg(p) * p.n_pc; }

std::vector<std::uint32_t> near_equal_factors(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> factors;
    std::uint32_t remaining = n;
    for (std::uint32_t i = 0; i < k && remaining > 1; ++i) {
        std::uint32_t parts_left = k - i;
        auto target = static_cast<std::uint32_t>(
            std::ceil(std::pow(static_cast<double>(remaining), 1.0 / parts_left) - 1e-9));
        // pick the smallest divisor of `remaining` that is >= target and >= 2
        std::uint32_t f = remaining;
        for (std::uint32_t d = std::max<std::uint32_t>(target, 2); d <= remaining; ++d) {
            if (remaining % d == 0) {
                f = d;
                break;
            }
        }
        factors.push_back(f);
        remaining /= f;
    }
    if (factors.empty()) factors.push_back(n);  // n == 1
    return factors;
}

ResourceCheck resource_check(const PerfParams& p) {
    p.validate();
    if ((p.n_pe & (p.n_pe - 1)) != 0)
        throw ConfigError("resource_check: n_pe must be a power of two");

    ResourceCheck r;
    double root = std::pow(static_cast<double>(p.n_pe), 1.0 / p.k);
    double rounded = std::round(root);
    bool integral = std::abs(root - rounded) < 1e-9 && rounded >= 1.0;
    if (integral) {
        r.used_closed_form = true;
        r.fifos = static_cast<std::uint64_t>(
            std::llround(p.k * std::pow(static_cast<double>(p.n_pe), 1.0 / p.k + 1.0)));
    } else {
        auto topo = CrossbarTopology::layered(near_equal_factors(p.n_pe, p.k));
        r.fifos = fifo_count(topo);
    }
    r.luts = static_cast<double>(r.fifos) * p.r_fifo + static_cast<double>(p.n_pe) * p.r_pe;
    r.feasible = r.luts < p.r_limit;
    return r;
}

PerfEstimate evaluate(const PerfParams& p) {
    p.validate();
    PerfEstimate e;
    e.dw_bits = data_width(p.n_pe, p.sv_bits);
    ChannelBw bw = channel_bw(e.dw_bits, p.freq_hz, p.bw_max);
    e.bw_bytes_per_s = bw.bytes_per_s;
    e.saturated = bw.saturated;
    e.p_nl = neighbor_fraction(p.len_nl, p.sv_bits, e.dw_bits);
    e.bw_nl = e.bw_bytes_per_s * e.p_nl;
    e.perf_pg_teps = e.bw_nl / (p.sv_bits / 8.0);
    e.perf_total_teps = e.perf_pg_teps * p.n_pc;
    e.feasible = resource_check(p).feasible;
    return e;
}

std::vector<SweepRow> sweep(const PerfParams& base, const std::vector<std::uint32_t>& n_pe_grid,
                            const std::vector<double>& len_nl_values) {
    std::vector<SweepRow> rows;
    rows.reserve(n_pe_grid.size() * len_nl_values.size());
    for (double len : len_nl_values) {
        for (std::uint32_t n_pe : n_pe_grid) {
            PerfParams p = base;
            p.n_pe = n_pe;
            p.len_nl = len;
            PerfEstimate e = evaluate(p);
            rows.push_back({n_pe, len, e.dw_bits, e.saturated, e.perf_pg_teps / 1e9,
                            e.perf_total_teps / 1e9, e.feasible});
        }
    }
    return rows;
}

}  // namespace scalabfs
