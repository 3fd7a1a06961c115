from .jet_model import (
    WFormula,
    JetTermModel,
    PartitionCoefficientModel,
    WFunctionModel,
    BCoefficientModel,
    BCoefficientsModel,
    MatrixModel,
)
from .hodge_table_model import HodgeClass, HodgeTable, HodgeEntryModel, HodgeTableModel, canonical_key
from .curve_target_model import CurveTargetModel
from .free_energy_model import FreeEnergySlice, FreeEnergySliceModel, SeriesTermModel
from .constant_model import StationaryConstantModel, EisensteinComparisonModel, TheoremAValueModel
from .verification_model import CheckResultModel, VerificationReportModel, IdentityReportModel
from .command_model import CommandModel

# Export all models to make imports cleaner from outside this package
__all__ = [
    # Jet payloads
    "WFormula",
    "JetTermModel",
    "PartitionCoefficientModel",
    "WFunctionModel",
    "BCoefficientModel",
    "BCoefficientsModel",
    "MatrixModel",

    # Hodge tables
    "HodgeClass",
    "HodgeTable",
    "HodgeEntryModel",
    "HodgeTableModel",
    "canonical_key",

    # Curve targets and free energies
    "CurveTargetModel",
    "FreeEnergySlice",
    "FreeEnergySliceModel",
    "SeriesTermModel",

    # Stationary constants
    "StationaryConstantModel",
    "EisensteinComparisonModel",
    "TheoremAValueModel",

    # Verification
    "CheckResultModel",
    "VerificationReportModel",
    "IdentityReportModel",

    # CLI
    "CommandModel",
]
