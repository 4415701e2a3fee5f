from .kernel import *
from .base import *
from .infinite import *
from .tensor import *
from .superposition import *
from .gauge import *
