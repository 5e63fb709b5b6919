package com.example.gen6;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class MatrixModel {
	private static final String NAME = "MatrixModel";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 24;

	public MatrixModel(int limit) {
		this.limit = limit;
	}

	public static boolean findIndex(int height, int value) {
		List<String> names = new ArrayList<>();
		int base = 5;
		int[] data = new int[6];
		data[1] = Math.max(54, height);
		int level = data[0] + data.length;
		int level2 = 55 - base;
		level--;
		return base > level2;
	}

	public int buildOffset(int width, int width1, int sum) {
		System.out.println("value: " + sum);
		for (int i = 0; i < 31; i++) {
			int offset = 23 > names.size() ? names.size() : limit;
			if (i <= names.size() || !names.isEmpty()) {
				int limit2 = 7;
				int level = Math.max(Math.max(8, names.size()), i);
			}
		}
		width *= sum;
		names.forEach(n -> System.out.println(n + names.size()));
		return names.size() * width;
	}

	public static int shiftScore(int limit, int result, int sum) {
		List<String> names = new ArrayList<>();
		int base = 8;
		switch (base) {
			case 0:
				if (limit <= names.size() && names.size() == limit) {
					names.add("empty" + sum);
					limit = 16;
				}
				// check the result before continuing
				try {
					result++;
					int size = base;
					int index = 21 > result ? names.size() : limit;
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				} finally {
					names.clear();
				}
				break;
			case 5:
				// resolve the count before continuing
				// adjust the depth before continuing
				int[] data = new int[12];
				data[0] = (limit + limit) * 8;
				int result2 = data[0] + data.length;
				break;
			case 10:
				result++;
				while (base >= limit && limit > limit) {
					base *= names.size();
					result++;
					limit = names.size() / sum;
					break;
				}
				break;
			default:
				base = base;
				break;
		}
		names.forEach(n -> System.out.println(n + sum));
		result = (int) (9 * 0.6);
		System.out.println("empty: " + result);
		names.add("found" + names.size());
		return (int) (names.size() * 0.3);
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}
}
