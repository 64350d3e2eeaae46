#include "scalabfs/crossbar.hpp"

#include <bit>
#include <cmath>

namespace scalabfs {

CrossbarTopology CrossbarTopology::full(std::uint32_t n, std::uint32_t fifo_depth) {
    CrossbarTopology t{n, {n}, fifo_depth};
    t.validate();
    return t;
}

CrossbarTopology CrossbarTopology::layered(std::vector<std::uint32_t> factors, std::uint32_t fifo_depth) {
    std::uint64_t n = 1;
    for (std::uint32_t c : factors) n *= c;
    CrossbarTopology t{static_cast<std::uint32_t>(n), std::move(factors), fifo_depth};
    t.validate();
    return t;
}

void CrossbarTopology::validate() const {
    if (n_ports == 0) throw ConfigError("crossbar: n_ports must be positive");
    if (factors.empty()) throw ConfigError("crossbar: at least one factor required");
    std::uint64_t prod = 1;
    for (std::uint32_t c : factors) {
        if (c < 2 && !(n_ports == 1 && c == 1))
            throw ConfigError("crossbar: factors must be >= 2");
        prod *= c;
    }
    if (prod != n_ports) throw ConfigError("crossbar: factor product must equal n_ports");
    if (fifo_depth == 0) throw ConfigError("crossbar: fifo_depth must be positive");
}

std::uint64_t fifo_count(const CrossbarTopology& t) {
    std::uint64_t total = 0;
    for (std::uint32_t c : t.factors)
        total += static_cast<std::uint64_t>(t.n_ports) / c * c * c;  // (N/C) * C^2
    return total;
}

std::vector<RouteHop> route_path(const CrossbarTopology& t, VertexId vid, std::uint32_t input_port) {
    t.validate();
    if (input_port >= t.n_ports) throw ConfigError("route_path: input port out of range");
    std::vector<RouteHop> path;
    path.reserve(t.factors.size());
    std::uint32_t wire = input_port;
    std::uint32_t mod_before = 1;
    for (std::uint32_t li = 0; li < t.factors.size(); ++li) {
        std::uint32_t c = t.factors[li];
        std::uint32_t mod_after = mod_before * c;
        std::uint32_t residue = wire % mod_before;
        std::uint32_t block = wire / mod_after;
        std::uint32_t sw = residue + mod_before * block;
        std::uint32_t out = (vid / mod_before) % c;
        path.push_back({li + 1, sw, out});
        wire = residue + mod_before * out + mod_after * block;
        mod_before = mod_after;
    }
    return path;
}

LutEstimate lut_estimate(const CrossbarTopology& t, double r_fifo, std::uint32_t n_pe, double r_pe,
                         double r_limit) {
    LutEstimate e;
    e.fifo_luts = static_cast<std::uint64_t>(static_cast<double>(fifo_count(t)) * r_fifo);
    e.luts = e.fifo_luts + static_cast<std::uint64_t>(static_cast<double>(n_pe) * r_pe);
    e.feasible = static_cast<double>(e.luts) < r_limit;
    return e;
}

void DispatchFabric::Switch::mark(std::uint32_t in, std::uint32_t out, bool pending) {
    std::uint64_t& word = occ[static_cast<std::size_t>(out) * occ_words + in / 64];
    std::uint64_t bit = std::uint64_t{1} << (in % 64);
    if (pending) {
        word |= bit;
        nonempty[out]++;
    } else {
        word &= ~bit;
        nonempty[out]--;
    }
}

int DispatchFabric::Switch::pick(std::uint32_t out, std::uint32_t start) const {
    if (nonempty[out] == 0) return -1;
    const std::uint64_t* words = occ.data() + static_cast<std::size_t>(out) * occ_words;
    std::uint32_t w0 = start / 64;
    std::uint64_t masked = words[w0] & (~std::uint64_t{0} << (start % 64));
    if (masked) return static_cast<int>(w0 * 64 + std::countr_zero(masked));
    for (std::uint32_t w = w0 + 1; w < occ_words; ++w)
        if (words[w]) return static_cast<int>(w * 64 + std::countr_zero(words[w]));
    for (std::uint32_t w = 0; w < w0; ++w)
        if (words[w]) return static_cast<int>(w * 64 + std::countr_zero(words[w]));
    masked = words[w0] & ~(~std::uint64_t{0} << (start % 64));
    if (masked) return static_cast<int>(w0 * 64 + std::countr_zero(masked));
    return -1;
}

DispatchFabric::DispatchFabric(CrossbarTopology t) : topo_(std::move(t)) {
    topo_.validate();
    layers_.resize(topo_.factors.size());
    std::uint32_t mod = 1;
    for (std::uint32_t li = 0; li < layers_.size(); ++li) {
        Layer& layer = layers_[li];
        layer.factor = topo_.factors[li];
        layer.modulus_before = mod;
        mod *= layer.factor;
        layer.modulus_after = mod;
        layer.switches.resize(topo_.n_ports / layer.factor);
        for (Switch& sw : layer.switches) {
            sw.radix = layer.factor;
            sw.occ_words = (layer.factor + 63) / 64;
            sw.fifos.resize(static_cast<std::size_t>(layer.factor) * layer.factor);
            sw.occ.assign(static_cast<std::size_t>(layer.factor) * sw.occ_words, 0);
            sw.nonempty.assign(layer.factor, 0);
        }
    }
}

void DispatchFabric::wire_position(std::uint32_t li, std::uint32_t wire, std::uint32_t& sw,
                                   std::uint32_t& in) const {
    const Layer& layer = layers_[li];
    std::uint32_t residue = wire % layer.modulus_before;
    std::uint32_t block = wire / layer.modulus_after;
    sw = residue + layer.modulus_before * block;
    in = (wire / layer.modulus_before) % layer.factor;
}

std::uint32_t DispatchFabric::next_wire(std::uint32_t li, std::uint32_t wire, std::uint32_t out) const {
    const Layer& layer = layers_[li];
    std::uint32_t residue = wire % layer.modulus_before;
    std::uint32_t block = wire / layer.modulus_after;
    return residue + layer.modulus_before * out + layer.modulus_after * block;
}

bool DispatchFabric::try_inject(std::uint32_t input_port, const DispatchMessage& m) {
    std::uint32_t sw_id, in;
    wire_position(0, input_port, sw_id, in);
    Switch& sw = layers_[0].switches[sw_id];
    std::uint32_t out = m.vid % layers_[0].factor;
    auto& fifo = sw.fifos[static_cast<std::size_t>(in) * sw.radix + out];
    if (fifo.size() >= topo_.fifo_depth) return false;
    fifo.push_back(m);
    if (fifo.size() == 1) sw.mark(in, out, true);
    ++injected_;
    ++in_flight_;
    return true;
}

std::vector<DeliveredMessage> DispatchFabric::step() {
    std::vector<DeliveredMessage> out_msgs;
    const std::uint32_t k = static_cast<std::uint32_t>(layers_.size());
    // Downstream layers first: a slot freed by this cycle's pop can accept
    // this cycle's push from the layer above, while a message pushed into a
    // layer this cycle cannot also leave it this cycle.
    for (std::uint32_t li_rev = 0; li_rev < k; ++li_rev) {
        std::uint32_t li = k - 1 - li_rev;
        Layer& layer = layers_[li];
        for (std::uint32_t sw_id = 0; sw_id < layer.switches.size(); ++sw_id) {
            Switch& sw = layer.switches[sw_id];
            // All outputs of this switch lead to wires sharing the switch's
            // residue/block coordinates; inputs only select the FIFO column.
            std::uint32_t residue = sw_id % layer.modulus_before;
            std::uint32_t block = sw_id / layer.modulus_before;
            for (std::uint32_t out = 0; out < sw.radix; ++out) {
                if (sw.nonempty[out] == 0) continue;
                std::uint32_t offset = static_cast<std::uint32_t>(cycle_) % sw.radix;
                std::uint32_t next = residue + layer.modulus_before * out + layer.modulus_after * block;
                std::uint32_t start = offset;
                for (std::uint32_t tries = 0; tries < sw.nonempty[out]; ++tries) {
                    int in_pick = sw.pick(out, start);
                    if (in_pick < 0) break;
                    auto in = static_cast<std::uint32_t>(in_pick);
                    auto& fifo = sw.fifos[static_cast<std::size_t>(in) * sw.radix + out];
                    DispatchMessage m = fifo.front();
                    if (li + 1 == k) {
                        fifo.pop_front();
                        if (fifo.empty()) sw.mark(in, out, false);
                        m.hop_count++;
                        --in_flight_;
                        ++delivered_;
                        out_msgs.push_back({next, m});
                    } else {
                        std::uint32_t dsw_id, din;
                        wire_position(li + 1, next, dsw_id, din);
                        Switch& dsw = layers_[li + 1].switches[dsw_id];
                        std::uint32_t dout =
                            (m.vid / layers_[li + 1].modulus_before) % layers_[li + 1].factor;
                        auto& dfifo = dsw.fifos[static_cast<std::size_t>(din) * dsw.radix + dout];
                        if (dfifo.size() >= topo_.fifo_depth) {
                            // blocked head; let the arbiter try the next input
                            start = (in + 1) % sw.radix;
                            continue;
                        }
                        fifo.pop_front();
                        if (fifo.empty()) sw.mark(in, out, false);
                        m.hop_count++;
                        dfifo.push_back(m);
                        if (dfifo.size() == 1) dsw.mark(din, dout, true);
                    }
                    break;  // at most one message per output per cycle
                }
            }
        }
    }
    ++cycle_;
    return out_msgs;
}

}  // namespace scalabfs
