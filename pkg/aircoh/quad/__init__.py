from .adaptive import *
from .window import *
from .fixed import *
