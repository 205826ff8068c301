// SPDX-License-Identifier: Apache-2.0
#include "beamform/array_sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamform {

namespace {

constexpr double kPi = std::numbers::pi;

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

} // namespace

double Scenario::sigma_n2() const { return sigma_s2() / db_to_lin(snr_db); }

int Scenario::total_snapshots() const {
    return segments.empty() ? 0 : segments.back().last;
}

int Scenario::segment_at(int i) const {
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (i >= segments[k].first && i <= segments[k].last) return static_cast<int>(k);
    }
    throw std::out_of_range("snapshot index outside scenario schedule");
}

void Scenario::validate() const {
    if (geometry.num_sensors < 2) throw std::invalid_argument("need at least 2 sensors");
    if (segments.empty()) throw std::invalid_argument("scenario has no segments");
    int expect = 1;
    for (const auto& seg : segments) {
        if (seg.first != expect || seg.last < seg.first)
            throw std::invalid_argument("segment ranges must partition [1, N]");
        int desired = 0;
        for (const auto& src : seg.sources) {
            if (src.is_desired) {
                ++desired;
                if (src.power_db_rel != 0.0)
                    throw std::invalid_argument("desired source must have 0 dB relative power");
            }
        }
        if (desired != 1)
            throw std::invalid_argument("each segment needs exactly one desired source");
        expect = seg.last + 1;
    }
}

namespace {

ScenarioSegment make_segment(int first, int last,
                             std::initializer_list<std::pair<double, double>> power_doa) {
    ScenarioSegment seg;
    seg.first = first;
    seg.last = last;
    bool desired = true; // first listed source is the desired user
    for (const auto& [p, doa] : power_doa) {
        seg.sources.push_back({doa, p, desired});
        desired = false;
    }
    return seg;
}

} // namespace

Scenario table4_scenario(double snr_db) {
    Scenario s;
    s.geometry.num_sensors = 10;
    s.snr_db = snr_db;
    s.mismatch.kind = MismatchKind::LocalCoherentScattering;
    s.segments.push_back(make_segment(
        1, 1000, {{0, 93}, {13, 120}, {1, 140}, {22, 67}, {10, 157}}));
    s.segments.push_back(make_segment(
        1001, 2000, {{0, 93}, {30, 120}, {25, 170}, {4, 104}, {9, 68}}));
    return s;
}

Scenario table5_scenario(double snr_db) {
    Scenario s;
    s.geometry.num_sensors = 10;
    s.snr_db = snr_db;
    s.mismatch.kind = MismatchKind::LocalCoherentScattering;
    s.segments.push_back(make_segment(
        1, 1000, {{0, 93}, {10, 120}, {5, 140}, {10, 150}, {7, 105}}));
    s.segments.push_back(make_segment(
        1001, 2000, {{0, 93}, {30, 120}, {34, 170}, {6, 104}, {9, 68}}));
    return s;
}

CVector steering_vector(const ArrayGeometry& geometry, double theta_deg) {
    if (!(theta_deg > 0.0 && theta_deg < 180.0))
        throw std::domain_error("steering angle must lie in (0, 180) degrees");
    const int m = geometry.num_sensors;
    CVector a(m);
    const double c = std::cos(theta_deg * kPi / 180.0);
    for (int k = 0; k < m; ++k) a(k) = std::polar(1.0, kPi * k * c);
    return a;
}

CVector realize_mismatch(const MismatchModel& model, const ArrayGeometry& geometry,
                         double presumed_doa_deg, std::mt19937_64& rng) {
    CVector a1 = steering_vector(geometry, presumed_doa_deg);
    if (model.kind == MismatchKind::None) return a1;

    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::normal_distribution<double> angle(presumed_doa_deg, model.angle_std_deg);
    for (int k = 0; k < model.num_paths; ++k) {
        const double phi = phase(rng);
        double theta = angle(rng);
        // keep the scatterer inside the valid angular domain
        theta = std::clamp(theta, 1e-3, 180.0 - 1e-3);
        a1 += std::polar(1.0, phi) * steering_vector(geometry, theta);
    }
    return a1;
}

SegmentTruth segment_truth(const Scenario& scenario, const ScenarioSegment& segment,
                           const CVector& desired_actual_steering) {
    const int m = scenario.geometry.num_sensors;
    SegmentTruth truth;
    truth.a1 = desired_actual_steering;
    truth.r_s = scenario.sigma_s2() * (truth.a1 * truth.a1.adjoint());
    truth.r_in = scenario.sigma_n2() * CMatrix::Identity(m, m);
    for (const auto& src : segment.sources) {
        if (src.is_desired) continue;
        const CVector a = steering_vector(scenario.geometry, src.doa_deg);
        const double power = scenario.sigma_s2() * db_to_lin(src.power_db_rel);
        truth.r_in += power * (a * a.adjoint());
    }
    return truth;
}

SnapshotStream::SnapshotStream(const Scenario& scenario,
                               const CVector& desired_actual_steering,
                               std::mt19937_64 rng)
    : scenario_(scenario), rng_(rng), desired_steering_(desired_actual_steering) {
    scenario_.validate();
}

void SnapshotStream::enter_segment(int seg) {
    segment_idx_ = seg;
    steering_.clear();
    amplitude_.clear();
    desired_.clear();
    for (const auto& src : scenario_.segments[seg].sources) {
        if (src.is_desired) {
            steering_.push_back(desired_steering_);
            amplitude_.push_back(std::sqrt(scenario_.sigma_s2()));
        } else {
            steering_.push_back(steering_vector(scenario_.geometry, src.doa_deg));
            amplitude_.push_back(std::sqrt(scenario_.sigma_s2() * db_to_lin(src.power_db_rel)));
        }
        desired_.push_back(src.is_desired);
    }
}

CVector SnapshotStream::next() {
    ++index_;
    const int seg = scenario_.segment_at(index_);
    if (seg != segment_idx_) enter_segment(seg);

    const int m = scenario_.geometry.num_sensors;
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector x = CVector::Zero(m);
    for (std::size_t k = 0; k < steering_.size(); ++k) {
        Complex s;
        if (desired_[k]) {
            s = std::polar(amplitude_[k], phase(rng_)); // |s1(i)| = sigma_s exactly
        } else {
            s = amplitude_[k] * Complex(gauss(rng_), gauss(rng_)) / std::sqrt(2.0);
        }
        x += s * steering_[k];
    }
    const double sn = std::sqrt(scenario_.sigma_n2() / 2.0);
    for (int k = 0; k < m; ++k) x(k) += Complex(sn * gauss(rng_), sn * gauss(rng_));
    return x;
}

double sinr_db(const CVector& w, const CMatrix& r_s, const CMatrix& r_in) {
    if (w.norm() == 0.0) throw std::domain_error("sinr: zero weight vector");
    const double num = std::real(w.dot(r_s * w));
    const double den = std::real(w.dot(r_in * w));
    return 10.0 * std::log10(num / den);
}

double optimal_sinr_db(const CVector& a1, double sigma_s2, const CMatrix& r_in) {
    const CVector t = r_in.llt().solve(a1);
    return 10.0 * std::log10(sigma_s2 * std::real(a1.dot(t)));
}

} // namespace beamform
