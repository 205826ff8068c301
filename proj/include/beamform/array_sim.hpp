// SPDX-License-Identifier: Apache-2.0
//
// Narrowband uniform linear array signal model: steering vectors, local
// coherent scattering mismatch, snapshot generation and SINR evaluation.
#ifndef BEAMFORM_ARRAY_SIM_HPP
#define BEAMFORM_ARRAY_SIM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beamform/linalg.hpp"

namespace beamform {

/// Half-wavelength ULA. Element m has phase exp(j*pi*(m-1)*cos(theta)),
/// theta in degrees from the array axis (broadside = 90 deg).
struct ArrayGeometry {
    int num_sensors = 10;

    bool operator==(const ArrayGeometry&) const = default;
};

struct SourceSpec {
    double doa_deg = 90.0;
    double power_db_rel = 0.0; // dB relative to the desired user
    bool is_desired = false;

    bool operator==(const SourceSpec&) const = default;
};

enum class MismatchKind { None, LocalCoherentScattering };

struct MismatchModel {
    MismatchKind kind = MismatchKind::None;
    int num_paths = 4;
    double angle_std_deg = 2.0;
    bool resample_per_trial = true;

    bool operator==(const MismatchModel&) const = default;
};

/// Contiguous snapshot range [first, last] with its active sources.
struct ScenarioSegment {
    int first = 1;
    int last = 1;
    std::vector<SourceSpec> sources;

    bool operator==(const ScenarioSegment&) const = default;
};

struct Scenario {
    ArrayGeometry geometry;
    std::vector<ScenarioSegment> segments;
    double snr_db = 0.0; // per-element: sigma_s^2 / sigma_n^2, sigma_s^2 = 1
    MismatchModel mismatch;

    double sigma_s2() const { return 1.0; }
    double sigma_n2() const;
    int total_snapshots() const;
    /// Segment index active at snapshot i (1-based). Throws if i is in no segment.
    int segment_at(int i) const;
    /// Segment ranges must partition [1, N] without gaps or overlaps.
    void validate() const;
};

/// Built-in schedules used throughout the simulation study.
Scenario table4_scenario(double snr_db);
Scenario table5_scenario(double snr_db);

CVector steering_vector(const ArrayGeometry& geometry, double theta_deg);

/// Actual steering vector of the desired user under the mismatch model.
/// With local coherent scattering: a1 = a + sum_k exp(j Phi_k) a(theta_k),
/// Phi_k ~ U[0, 2pi), theta_k ~ N(presumed_doa, angle_std^2). Fixed across
/// the snapshots of one trial.
CVector realize_mismatch(const MismatchModel& model, const ArrayGeometry& geometry,
                         double presumed_doa_deg, std::mt19937_64& rng);

/// Analytic truth matrices of one segment, built from the true steering
/// vectors and powers (not from samples).
struct SegmentTruth {
    CVector a1;     // actual steering vector of the desired user
    CMatrix r_s;    // sigma_s^2 a1 a1^H
    CMatrix r_in;   // interference + noise covariance
};

SegmentTruth segment_truth(const Scenario& scenario, const ScenarioSegment& segment,
                           const CVector& desired_actual_steering);

/// Sequential snapshot generator for one trial. The desired user emits
/// unit-modulus samples with i.i.d. uniform phase; interferers are circular
/// complex Gaussian; noise is circular complex Gaussian with variance
/// sigma_n^2. Deterministic given the rng state.
class SnapshotStream {
public:
    SnapshotStream(const Scenario& scenario, const CVector& desired_actual_steering,
                   std::mt19937_64 rng);

    /// Next snapshot x(i); advances i by one.
    CVector next();
    int index() const { return index_; }

private:
    const Scenario scenario_;
    std::mt19937_64 rng_;
    int index_ = 0;
    int segment_idx_ = -1;
    std::vector<CVector> steering_;   // per source of the active segment
    std::vector<double> amplitude_;   // per-source std deviations
    std::vector<bool> desired_;
    CVector desired_steering_;

    void enter_segment(int seg);
};

double sinr_db(const CVector& w, const CMatrix& r_s, const CMatrix& r_in);
double optimal_sinr_db(const CVector& a1, double sigma_s2, const CMatrix& r_in);

} // namespace beamform

#endif
