#include <algorithm>
#include <sstream>

#include "pfimi/cluster.hpp"
#include "pfimi/errors.hpp"

namespace pfimi {

const char* to_string(MsgKind k) {
    switch (k) {
        case MsgKind::item_counts: return "item_counts";
        case MsgKind::db_sample: return "db_sample";
        case MsgKind::powerset_mass: return "powerset_mass";
        case MsgKind::fi_sample: return "fi_sample";
        case MsgKind::fi_count: return "fi_count";
        case MsgKind::draw_count: return "draw_count";
        case MsgKind::plan: return "plan";
        case MsgKind::transactions: return "transactions";
        case MsgKind::prefix_supports: return "prefix_supports";
        case MsgKind::steal_request: return "steal_request";
        case MsgKind::steal_work: return "steal_work";
        case MsgKind::steal_none: return "steal_none";
        case MsgKind::token: return "token";
        case MsgKind::terminate: return "terminate";
    }
    return "?";
}

SimCluster::SimCluster(std::size_t P) : inboxes_(P), pending_(P), sent_(P, 0), bytes_(P, 0) {
    if (P == 0) throw ParameterError("P must be >= 1");
}

void SimCluster::send(Message m) {
    if (m.from >= size() || m.to >= size()) throw ParameterError("message addressed outside the cluster");
    // 16-byte header, 8 bytes per integer, 4 bytes per item/tid plus a length word.
    std::uint64_t b = 16 + 8 * m.ints.size();
    for (const auto& s : m.itemsets) b += 4 + 4 * s.size();
    for (const auto& t : m.txns) b += 8 + 4 * t.items.size();
    m.bytes = b;
    ++sent_[m.from];
    bytes_[m.from] += b;
    ++total_sent_;
    total_bytes_ += b;
    pending_[m.to].push_back(std::move(m));
}

void SimCluster::deliver() {
    for (std::size_t w = 0; w < size(); ++w) {
        for (auto& m : pending_[w]) {
            if (tracing_) {
                std::ostringstream os;
                os << round_ << ' ' << m.from << ' ' << m.to << ' ' << to_string(m.kind) << ' ' << m.bytes;
                trace_.push_back(os.str());
            }
            inboxes_[w].push_back(std::move(m));
        }
        pending_[w].clear();
    }
    ++round_;
}

std::optional<Message> SimCluster::receive(std::size_t worker) {
    auto& q = inboxes_.at(worker);
    if (q.empty()) return std::nullopt;
    Message m = std::move(q.front());
    q.pop_front();
    ++total_received_;
    return m;
}

std::optional<Message> SimCluster::receive(std::size_t worker, MsgKind kind) {
    auto& q = inboxes_.at(worker);
    auto it = std::find_if(q.begin(), q.end(), [&](const Message& m) { return m.kind == kind; });
    if (it == q.end()) return std::nullopt;
    Message m = std::move(*it);
    q.erase(it);
    ++total_received_;
    return m;
}

Message SimCluster::expect(std::size_t worker, MsgKind kind) {
    auto m = receive(worker, kind);
    if (!m) throw WorkerError(worker, std::string("expected a ") + to_string(kind) + " message");
    return std::move(*m);
}

bool SimCluster::quiescent() const {
    for (std::size_t w = 0; w < size(); ++w)
        if (!inboxes_[w].empty() || !pending_[w].empty()) return false;
    return true;
}

ExchangeSchedule exchange_schedule(std::size_t P) {
    if (P == 0) throw ParameterError("P must be >= 1");
    ExchangeSchedule s;
    if (P == 1) return s;
    // Circle method on n players (a dummy player n when P is odd). Players are 1-based here.
    const std::size_t n = P % 2 == 0 ? P : P + 1;
    const std::size_t as = n / 2;
    std::vector<std::size_t> top(as), bottom(as);
    for (std::size_t q = 1; q <= as; ++q) {
        top[q - 1] = q;
        bottom[as - q] = as + q;
    }
    for (std::size_t r = 0; r + 1 < n; ++r) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t q = 0; q < as; ++q) {
            std::size_t a = top[q], b = bottom[q];
            if (a > P || b > P) continue;  // paired with the dummy: idle this round
            pairs.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
        }
        s.rounds.push_back(std::move(pairs));
        // top[0] stays; the rest rotate clockwise.
        std::vector<std::size_t> nt(as), nb(as);
        nt[0] = top[0];
        if (as > 1) {
            nt[1] = bottom[0];
            for (std::size_t q = 2; q < as; ++q) nt[q] = top[q - 1];
            for (std::size_t q = 0; q + 1 < as; ++q) nb[q] = bottom[q + 1];
            nb[as - 1] = top[as - 1];
        } else {
            nb[0] = bottom[0];
        }
        top = std::move(nt);
        bottom = std::move(nb);
    }
    return s;
}

Variant parse_variant(const std::string& s) {
    if (s == "seq") return Variant::seq;
    if (s == "par") return Variant::par;
    if (s == "reservoir") return Variant::reservoir;
    throw ParameterError("unknown variant '" + s + "' (seq|par|reservoir)");
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::seq: return "seq";
        case Variant::par: return "par";
        case Variant::reservoir: return "reservoir";
    }
    return "?";
}

SchedulerKind parse_scheduler(const std::string& s) {
    if (s == "lpt") return SchedulerKind::lpt;
    if (s == "qkp") return SchedulerKind::qkp;
    throw ParameterError("unknown scheduler '" + s + "' (lpt|qkp)");
}

std::string to_string(SchedulerKind s) {
    return s == SchedulerKind::lpt ? "lpt" : "qkp";
}

}  // namespace pfimi
