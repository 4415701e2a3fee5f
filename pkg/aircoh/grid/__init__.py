from .base import *
from .evaluate import *
from .landmarks import *
