#pragma once

#include <cstdint>
#include <vector>

#include "scalabfs/types.hpp"

namespace scalabfs {

/// Closed-form model inputs. Resource defaults are back-solved from the
/// U280 utilization of the 32-PC/64-PE build (1304K LUTs total).
struct PerfParams {
    std::uint32_t n_pe = 2;        // PEs per PG
    std::uint32_t n_pc = 32;       // PGs / pseudo channels
    std::uint32_t sv_bits = 32;    // vertex storage size
    double freq_hz = 100e6;        // F
    double bw_max = 13.27e9;       // bytes/s per PC
    double len_nl = 64.0;          // average neighbor-list length
    std::uint32_t k = 1;           // dispatcher layer count
    double r_fifo = 227.0;         // LUTs per FIFO
    double r_pe = 2916.0;          // LUTs per PE
    double r_limit = 1304000.0;    // LUT budget

    void validate() const;
};

struct PerfEstimate {
    double dw_bits = 0;
    double bw_bytes_per_s = 0;
    double p_nl = 0;
    double bw_nl = 0;
    double perf_pg_teps = 0;
    double perf_total_teps = 0;
    bool saturated = false;
    bool feasible = false;
};

/// AXI data width: 2 * N_pe * S_v bits.
double data_width(std::uint32_t n_pe, std::uint32_t sv_bits);

struct ChannelBw {
    double bytes_per_s = 0;
    bool saturated = false;
};

/// Per-PC bandwidth min(DW/8 * F, BW_MAX); saturated when the cap applies.
ChannelBw channel_bw(double dw_bits, double freq_hz, double bw_max);

/// Fraction of channel bandwidth carrying neighbor-list data:
/// Len*S_v / (DW + Len*S_v).
double neighbor_fraction(double len_nl, std::uint32_t sv_bits, double dw_bits);

/// Single-PG throughput in TEPS; equals channel_bw * neighbor_fraction /
/// vertex bytes in both the bandwidth-limited and pipeline-limited regimes.
double perf_pg(const PerfParams& p);

/// Whole-accelerator throughput: perf_pg * N_pc.
double perf_total(const PerfParams& p);

struct ResourceCheck {
    std::uint64_t fifos = 0;
    double luts = 0;
    bool feasible = false;
    bool used_closed_form = false;
};

/// LUT inequality k*N_pe^(1/k+1)*R_FIFO + N_pe*R_PE < R_limit. When
/// N_pe^(1/k) is not an integer the FIFO term falls back to the exact count
/// of a near-equal factorization. Throws ConfigError unless n_pe is a power
/// of two.
ResourceCheck resource_check(const PerfParams& p);

/// Every model quantity bundled up for one design point.
PerfEstimate evaluate(const PerfParams& p);

struct SweepRow {
    std::uint32_t n_pe = 0;
    double len_nl = 0;
    double dw_bits = 0;
    bool saturated = false;
    double perf_pg_gteps = 0;
    double perf_total_gteps = 0;
    bool feasible = false;
};

/// Design-space sweep over power-of-two PE counts for each neighbor-list
/// length. Rows are ordered len-major, n_pe ascending.
std::vector<SweepRow> sweep(const PerfParams& base, const std::vector<std::uint32_t>& n_pe_grid,
                            const std::vector<double>& len_nl_values);

/// Splits n into k near-equal factors (each >= 2 when possible), largest
/// first. Used by the resource-check fallback.
std::vector<std::uint32_t> near_equal_factors(std::uint32_t n, std::uint32_t k);

}  // namespace scalabfs
