"""Fleet fuel-consumption anomaly analytics.

End-to-end toolkit for explaining anomalous vehicle fuel consumption from
telematics data: daily aggregation into a Fleet Analytics Record (FAR),
two-pass box-plot outlier labeling, interpretable additive models trained
by cyclic gradient boosting (optionally monotone-constrained or stacked
with per-vehicle-group error models), business-rule-filtered feature
relevance explanations, counterfactual fuel-saving recommendations for
fleet operators and managers, and a quantitative explanation-quality
metric suite.
"""

__version__ = "0.1.0"

TOOL_NAME = "fleetfuel"
