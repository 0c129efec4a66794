#pragma once

#include <string>
#include <vector>

#include "emknot/fieldlines.hpp"
#include "emknot/grid.hpp"
#include "emknot/knotfields.hpp"

#include <nlohmann/json_fwd.hpp>

namespace emknot {

/// Metadata stored in field-file headers: unit conventions plus the knot
/// parameters and time the grids were generated from.
struct FieldFileMeta {
    KnotParams params;
    double time = 0.0;
    Units units;
};

nlohmann::json meta_to_json(const FieldFileMeta& meta, const GridSpec& grid);

/// Legacy-VTK ASCII structured points with two VECTORS arrays named E and B.
void write_vtk_fields(const std::string& path, const RealVectorFieldGrid& E,
                      const RealVectorFieldGrid& B, const FieldFileMeta& meta);

/// CSV with columns x,y,z,Ex,Ey,Ez,Bx,By,Bz and a JSON header comment.
void write_csv_fields(const std::string& path, const RealVectorFieldGrid& E,
                      const RealVectorFieldGrid& B, const FieldFileMeta& meta);

struct LoadedFields {
    RealVectorFieldGrid E, B;
    FieldFileMeta meta;
};

/// Re-ingest a field file written by this toolkit (.vtk or .csv by extension).
LoadedFields read_fields(const std::string& path);

/// One curve as CSV (x,y,z rows with a JSON header recording closure).
void write_curve_csv(const std::string& path, const Curve& c);

/// All curves as polyline blocks in one legacy-VTK polydata file.
void write_curves_vtk(const std::string& path, const std::vector<Curve>& curves);

/// Shortest decimal form that round-trips a double exactly (17 significant
/// digits).
std::string format_double(double v);

}  // namespace emknot
