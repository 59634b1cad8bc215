"""From-scratch learners used by the evaluation pipeline and the correctors."""
from .base import ConstantModel, TrainedModel
from .bayes import GaussianNBModel, naive_bayes_fit
from .cluster import Clustering, kmeans, seeded_kmeans
from .cotrain import CoTrainModel, cotrain_fit
from .logistic import LogisticModel, logreg_fit
from .trees import BaggedTrees, bagged_trees_fit

__all__ = [
    "BaggedTrees", "Clustering", "CoTrainModel", "ConstantModel", "GaussianNBModel",
    "LogisticModel", "TrainedModel", "bagged_trees_fit", "cotrain_fit", "kmeans",
    "logreg_fit", "naive_bayes_fit", "seeded_kmeans",
]
