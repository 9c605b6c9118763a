"""Random-walk and weak-form market efficiency tests for monthly price series."""

from .autocorrelation import AcfResult, AcfRow, acf, acf_se, acf_t, acf_table
from .distributions import PValue, chi2_df2_sf, kolmogorov_sf, std_normal_cdf
from .errors import (
    DegenerateSeriesError,
    FormatError,
    InvalidInputError,
    SingularDesignError,
    WeakFormError,
)
from .io import ingest_csv, write_csv
from .normality import NormalityResult, jarque_bera, ks_test, normality
from .report import AnalysisConfig, EfficiencyReport, IndexReport, analyze, render
from .runs import (
    RunsResult,
    classify_relative_to_mean,
    count_runs,
    expected_runs,
    runs_test,
    runs_test_from_counts,
    runs_variance,
)
from .series import (
    ChangeSeries,
    PriceSeries,
    changes,
    kurtosis,
    mean,
    sample_std,
    skewness,
)
from .simulate import SimSpec, simulate
from .unit_root import AdfResult, OlsFit, adf, adf_pvalue, critical_values, ols

__version__ = "0.1.0"
