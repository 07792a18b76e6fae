from . import config
from .core import *
from .io import *
