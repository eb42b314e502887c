#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfr/bf_core.hpp"
#include "bfr/numerics.hpp"

namespace bfr::report {

enum class PriorFamily { Normal, Cauchy };
enum class Spacing { Linear, Log };

/// point: a grid evaluation; flip: BF01 = 1 annotation; marker: a highlighted scale.
enum class RowKind { Point, Flip, Marker };

std::string_view to_string(PriorFamily f) noexcept;
std::string_view to_string(Spacing s) noexcept;
std::string_view to_string(RowKind k) noexcept;
std::optional<PriorFamily> parse_prior_family(std::string_view s) noexcept;
std::optional<Spacing> parse_spacing(std::string_view s) noexcept;
std::optional<RowKind> parse_row_kind(std::string_view s) noexcept;

struct SweepRow {
    RowKind kind;
    double scale;
    std::optional<double> k;  // n * tau^2; normal prior only
    double bf01;
    double log_bf01;
    Direction direction;
};

struct SweepSpec {
    double z;
    int n;
    PriorFamily family = PriorFamily::Normal;
    double scale_min;
    double scale_max;
    int points = 100;
    Spacing spacing = Spacing::Linear;

    /// Throws DomainError unless 0 < scale_min < scale_max and points >= 2.
    void validate() const;
};

/// Grid of BF01 against prior scale. For a normal prior with |z| > 1 a
/// trailing kind=flip row carries (tau*, k*).
std::vector<SweepRow> sweep(const SweepSpec& spec, const numerics::SolverConfig& cfg = {});

/// Evenly spaced (linear or geometric) grid from lo to hi inclusive.
std::vector<double> grid(double lo, double hi, int points, Spacing spacing);

struct TableOneRow {
    double z;
    double z_squared;
    double p_value;
    double k_star;
    double tau_star_n50;
    double tau_star_n100;
};

inline constexpr double kTableOneZ[] = {1.50, 1.96, 2.00, 2.50, 3.00};

TableOneRow table_one_row(double z);
std::vector<TableOneRow> table1();

/// One point of a BF01-versus-k curve in panel A.
struct CurveRow {
    RowKind kind;
    double z;
    double k;
    double bf01;
    double log_bf01;
    Direction direction;
};

struct FigureOneData {
    std::vector<CurveRow> panel_a;
    std::vector<SweepRow> panel_b;
};

inline constexpr double kPanelAZ[] = {1.50, 1.96, 2.00, 2.50, 3.00};
inline constexpr double kPanelAKMin = 1e-2;
inline constexpr double kPanelAKMax = 1e5;
inline constexpr int kPanelAPoints = 211;
inline constexpr double kPanelBZ = 2.0;
inline constexpr int kPanelBN = 50;
inline constexpr double kPanelBTauMin = 0.1;
inline constexpr double kPanelBTauMax = 3.0;
inline constexpr int kPanelBPoints = 291;
inline constexpr double kPanelBMarkers[] = {0.8, 1.5};

FigureOneData figure1();

// Rendering. decimals = nullopt renders 17 significant digits (file output);
// otherwise fixed-point with that many decimals (terminal output).
using Decimals = std::optional<int>;

std::string format_number(double x, Decimals decimals);

std::string table1_csv(const std::vector<TableOneRow>& rows, Decimals decimals);
std::string table1_json(const std::vector<TableOneRow>& rows, Decimals decimals);

/// Per-column decimals, in TableOneRow field order.
using TableOneDecimals = std::array<Decimals, 6>;
/// z and z^2 to 2 places, p to 3, k* and both tau* columns to 2.
inline constexpr TableOneDecimals kTableOnePublished = {2, 2, 3, 2, 2, 2};

std::string table1_csv(const std::vector<TableOneRow>& rows, const TableOneDecimals& decimals);
std::string table1_json(const std::vector<TableOneRow>& rows, const TableOneDecimals& decimals);
std::string sweep_csv(const std::vector<SweepRow>& rows, Decimals decimals);
std::string sweep_json(const std::vector<SweepRow>& rows, Decimals decimals);
std::string panel_a_csv(const std::vector<CurveRow>& rows, Decimals decimals);
std::string panel_a_json(const std::vector<CurveRow>& rows, Decimals decimals);

/// Both panels in one document: CSV sections headed '# panel A' / '# panel B',
/// or a JSON object with panel_a and panel_b arrays.
std::string figure1_csv(const FigureOneData& fig, Decimals decimals);
std::string figure1_json(const FigureOneData& fig, Decimals decimals);

std::string sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string panel_a_svg(const std::vector<CurveRow>& rows);
std::string panel_b_svg(const std::vector<SweepRow>& rows);

/// Round to the given number of decimals (identity for nullopt).
double round_to(double x, Decimals decimals);

}  // namespace bfr::report
