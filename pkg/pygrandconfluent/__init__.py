"""PyGrandConfluent evaluates grand confluent hypergeometric functions and the quark-antiquark spectrum."""

try:
    from importlib.metadata import version
    __version__ = version('PyGrandConfluent')
except Exception:
    __version__ = "0.3.0"


from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.SeriesSolution import SeriesSolution
from pygrandconfluent.Jet import Jet
from pygrandconfluent.RecurrenceEngine import RecurrenceEngine, FrobeniusCase, LambdaBranch
from pygrandconfluent.GchFunction import GchFunction, GchEvaluation, SeriesMode
from pygrandconfluent.LogSeries import PrintedLogSeries, LogCase
from pygrandconfluent.OrthoExpansion import OrthoExpansion
from pygrandconfluent.GeneratingFunction import GeneratingFunction
from pygrandconfluent.AsymptoticClassifier import RawOdeParams, classify
from pygrandconfluent.QQbarSpectrum import QQbarSpectrum, PhysicsParams, QuantumNumbers

__all__ = ['GchParams', 'TerminationSpec', 'SeriesSolution', 'Jet', 'RecurrenceEngine', 'FrobeniusCase',
           'LambdaBranch', 'GchFunction', 'GchEvaluation', 'SeriesMode', 'PrintedLogSeries', 'LogCase',
           'OrthoExpansion', 'GeneratingFunction', 'RawOdeParams', 'classify', 'QQbarSpectrum', 'PhysicsParams',
           'QuantumNumbers']
