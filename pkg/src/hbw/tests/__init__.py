"""hbw Tests"""
