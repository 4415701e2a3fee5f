from .airy import *
